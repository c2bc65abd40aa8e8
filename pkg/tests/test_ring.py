from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cyclotomic_by_division
from periodic_rt.errors import DivisionByZero, FieldMismatch, NonInvertibleDenominator, NotIntegral
from periodic_rt.ring import (
    FieldElement,
    LaurentPolynomial,
    cyclotomic_field,
    cyclotomic_polynomial,
    euler_phi,
    extend_field,
    in_ideal,
    is_integral,
    jp_generator,
)

FIELDS = (4, 12, 16, 24)


def elements(n: int, integral: bool = False, size: int = 6):
    F = cyclotomic_field(n)
    if integral:
        coeff = st.integers(-size, size)
    else:
        coeff = st.fractions(min_value=-size, max_value=size, max_denominator=7)
    return st.lists(coeff, min_size=F.degree, max_size=F.degree).map(F.element)


# -- cyclotomic polynomials -------------------------------------------------


def test_cyclotomic_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_matches_division_oracle_and_vanishes_at_root(n):
    phi = cyclotomic_polynomial(n)
    assert list(phi) == cyclotomic_by_division(n)
    assert len(phi) - 1 == euler_phi(n)
    z = cmath.exp(2j * math.pi / n)
    assert abs(sum(c * z**k for k, c in enumerate(phi))) < 1e-6


# -- field arithmetic examples ----------------------------------------------


def test_gaussian_examples():
    F = cyclotomic_field(4)
    z = F.zeta()
    assert z * z == F.scalar(-1)
    assert z.inverse() == -z
    assert 1 / z == -z


def test_zeta12_squared_plus_inverse():
    F = cyclotomic_field(12)
    z = F.zeta()
    x = z**2 + z**-2
    assert z**-2 == -(z**4)
    assert x == z**2 - z**4
    assert abs(complex(x) - 2 * math.cos(math.pi / 3)) < 1e-12
    assert x == F.one()


def test_division_by_zero_and_mismatch():
    F = cyclotomic_field(12)
    with pytest.raises(DivisionByZero):
        F.one() / F.zero()
    with pytest.raises(ZeroDivisionError):
        F.zero() ** -1
    with pytest.raises(FieldMismatch):
        F.one() + cyclotomic_field(8).one()


def test_canonical_form_and_json_round_trip():
    F = cyclotomic_field(12)
    x = F.element([Fraction(2, 4), 0, Fraction(-3, 6), 1])
    assert x.coeffs == (Fraction(1, 2), 0, Fraction(-1, 2), 1)
    assert FieldElement.from_json(x.to_json()) == x
    assert x.to_json()["coeffs"] == ["1/2", "0", "-1/2", "1"]


# -- extension ---------------------------------------------------------------


def test_extend_examples():
    F4 = cyclotomic_field(4)
    assert extend_field(F4.one(), 2) == cyclotomic_field(8).one()
    assert extend_field(F4.zeta(), 2) == cyclotomic_field(8).zeta(2)
    F12 = cyclotomic_field(12)
    y = extend_field(F12.zeta() + F12.zeta(-1), 2)
    assert y.field.n == 24
    assert abs(complex(y) - 2 * math.cos(math.pi / 6)) < 1e-12


@settings(max_examples=200, deadline=None)
@given(elements(12), elements(12))
def test_extend_is_a_ring_homomorphism(a, b):
    for f in (2, 3):
        assert extend_field(a * b, f) == extend_field(a, f) * extend_field(b, f)
        assert extend_field(a + b, f) == extend_field(a, f) + extend_field(b, f)


# -- ring axioms (1000 cases per field) -------------------------------------


@pytest.mark.parametrize("n", FIELDS)
def test_ring_axioms(n):
    @settings(max_examples=1000, deadline=None, derandomize=True)
    @given(elements(n), elements(n), elements(n))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b

    check()


# -- integrality and J_p ------------------------------------------------------


def test_is_integral_examples(data):
    F = cyclotomic_field(12)
    assert is_integral(F.one())
    assert not is_integral(F.scalar(Fraction(1, 2)))
    d3 = data[3]
    X = sum((d * d for d in d3.dims), d3.field.zero())
    assert X == 2 and is_integral(X)


def test_jp_generator_examples(data):
    F = cyclotomic_field(12)
    phibar3 = [c % 3 for c in F.phi]
    assert list(jp_generator(3, [], F).g) == phibar3
    assert list(jp_generator(3, [F.one()], F).g) == phibar3
    d3 = data[3]
    J = jp_generator(3, d3.dims, d3.field)
    assert list(J.g) == [c % 3 for c in d3.field.phi]
    assert not J.vacuous


def test_jp_generator_rejects_bad_input():
    F = cyclotomic_field(12)
    with pytest.raises(ValueError):
        jp_generator(2, [F.one()])
    with pytest.raises(ValueError):
        jp_generator(9, [F.one()])
    with pytest.raises(NotIntegral):
        jp_generator(3, [F.scalar(Fraction(1, 2))])


def test_in_ideal_examples(data):
    for r in (3, 4, 5):
        d = data[r]
        for p in (3, 5, 7):
            J = jp_generator(p, d.dims, d.field)
            assert in_ideal(d.field.scalar(p), J)
            for x in d.dims:
                assert in_ideal(x**p - x, J)
            if not J.vacuous:
                assert not in_ideal(d.field.one(), J)


def test_in_ideal_denominator_divisible_by_p():
    F = cyclotomic_field(12)
    J = jp_generator(3, [], F)
    assert in_ideal(F.scalar(Fraction(3, 2)), J)
    with pytest.raises(NonInvertibleDenominator):
        in_ideal(F.scalar(Fraction(1, 3)), J)


@pytest.mark.parametrize("r,p", [(3, 3), (3, 5), (4, 3), (5, 3), (5, 7)])
def test_in_ideal_closure(data, r, p):
    d = data[r]
    J = jp_generator(p, d.dims, d.field)
    gens = [d.field.scalar(p)] + [x**p - x for x in d.dims]
    ints = elements(d.field.n, integral=True, size=4)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(st.lists(ints, min_size=len(gens), max_size=len(gens)), ints)
    def check(coeffs, s):
        x = sum((c * g for c, g in zip(coeffs, gens)), d.field.zero())
        assert in_ideal(x, J)
        y = gens[0] * s
        assert in_ideal(x + y, J)
        assert in_ideal(s * x, J)

    check()


@settings(max_examples=300, deadline=None)
@given(elements(12, integral=True, size=20))
def test_membership_is_coefficient_divisibility_when_dims_are_fixed(x):
    # r=3 dims are +1 and -1, so d^p = d and J_p = (p)
    F = x.field
    J = jp_generator(3, [F.one(), -F.one()], F)
    assert in_ideal(x, J) == all(c % 3 == 0 for c in x.num)


# -- Laurent polynomials ------------------------------------------------------


laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)


@settings(max_examples=200, deadline=None)
@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert all(v != 0 for v in (a * b).terms.values())


@settings(max_examples=100, deadline=None)
@given(laurent, laurent)
def test_laurent_specialization_is_a_homomorphism(a, b):
    A = cyclotomic_field(12).zeta()
    assert (a * b).specialize(A) == a.specialize(A) * b.specialize(A)
