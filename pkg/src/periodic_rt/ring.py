"""Exact scalars: Laurent polynomials in A, cyclotomic fields Q(zeta_n), and
membership in the ideal J_p = (p, d_i^p - d_i).

Field elements are stored as an integer numerator vector over the power basis
1, z, ..., z^(phi(n)-1) together with a positive common denominator, kept in
lowest terms so every element has exactly one representation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import DivisionByZero, FieldMismatch, NonInvertibleDenominator, NotIntegral

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer polynomials (tuples, constant term first)


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _ipoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ipoly_exact_div(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Divide by a monic integer polynomial; the remainder must vanish."""
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for j, y in enumerate(b):
                a[k - db + j] -= c * y
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def euler_phi(n: int) -> int:
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as a coefficient tuple, constant term first.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _ipoly_mul(den, cyclotomic_polynomial(d))
    return tuple(_ipoly_exact_div(num, den))


# ---------------------------------------------------------------------------
# fields


class CyclotomicField:
    """Q(zeta_n). Obtain instances through :func:`cyclotomic_field`."""

    __slots__ = ("n", "phi", "degree", "_zeta_cache")

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.degree = len(self.phi) - 1
        self._zeta_cache: dict[int, FieldElement] = {}

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"

    def __reduce__(self):
        return (cyclotomic_field, (self.n,))

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.n))

    def reduce(self, vec: list[int]) -> list[int]:
        """Remainder of an integer vector modulo Phi_n (in place, returns length degree)."""
        d, phi = self.degree, self.phi
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if c:
                base = k - d
                for j in range(d):
                    pj = phi[j]
                    if pj:
                        vec[base + j] -= c * pj
        if len(vec) < d:
            vec.extend([0] * (d - len(vec)))
        return vec[:d]

    def element(self, coeffs: Iterable[Rational]) -> "FieldElement":
        return FieldElement(self, coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement._make(self, [0] * self.degree, 1)

    def one(self) -> "FieldElement":
        return self.scalar(1)

    def scalar(self, q: Rational) -> "FieldElement":
        q = Fraction(q)
        v = [0] * self.degree
        v[0] = q.numerator
        return FieldElement._make(self, v, q.denominator)

    def zeta(self, k: int = 1) -> "FieldElement":
        k %= self.n
        z = self._zeta_cache.get(k)
        if z is None:
            v = [0] * (k + 1)
            v[k] = 1
            z = FieldElement._make(self, self.reduce(v), 1)
            self._zeta_cache[k] = z
        return z


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CyclotomicField:
    if n < 1:
        raise ValueError("n must be positive")
    return CyclotomicField(n)


def _coerce(field: CyclotomicField, other) -> "FieldElement":
    if isinstance(other, FieldElement):
        if other.field.n != field.n:
            raise FieldMismatch(f"Q(zeta_{field.n}) vs Q(zeta_{other.field.n})", "ring.field_ops")
        return other
    if isinstance(other, (int, Fraction)):
        return field.scalar(other)
    return NotImplemented


class FieldElement:
    """Immutable element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CyclotomicField, coeffs: Iterable[Rational]):
        fr = [Fraction(c) for c in coeffs]
        vec_den = 1
        for c in fr:
            vec_den = vec_den * c.denominator // math.gcd(vec_den, c.denominator)
        vec = [int(c * vec_den) for c in fr]
        vec = field.reduce(vec)
        self._set(field, vec, vec_den)

    def _set(self, field, vec, den):
        g = den
        for c in vec:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g != 1:
            vec = [c // g for c in vec]
            den //= g
        self.field = field
        self.num = tuple(vec)
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, field: CyclotomicField, vec: list[int], den: int) -> "FieldElement":
        obj = cls.__new__(cls)
        if den < 0:
            vec, den = [-c for c in vec], -den
        obj._set(field, vec, den)
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field.n == other.field.n and self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    def __complex__(self) -> complex:
        n = self.field.n
        s = sum(c * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(self.num) if c)
        return complex(s) / self.den

    def numeric(self) -> complex:
        return complex(self)

    def embed(self, a: int) -> complex:
        """Numeric value under the embedding zeta_n -> exp(2 pi i a / n)."""
        n = self.field.n
        s = sum(c * cmath.exp(2j * math.pi * a * k / n) for k, c in enumerate(self.num) if c)
        return complex(s) / self.den

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return FieldElement._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        da, db = self.den, other.den
        return FieldElement._make(
            self.field, [a * db + b * da for a, b in zip(self.num, other.num)], da * db
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._make(self.field, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._make(self.field, [a * other for a in self.num], self.den)
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldElement._make(self.field, self.field.reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero", "ring.field_ops")
        # extended Euclid against Phi_n over Q
        phi = [Fraction(c) for c in self.field.phi]
        a = _trim([Fraction(c, self.den) for c in self.num])
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        # invariant: s_i * a = r_i (mod Phi_n)
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
            if not r1:
                raise ArithmeticError("nontrivial gcd with Phi_n")
        c = r1[0]
        return FieldElement(self.field, [x / c for x in s1])

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(self.field, other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- formatting -------------------------------------------------------

    def to_text(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono:
                if c == 1:
                    s = mono
                elif c == -1:
                    s = "-" + mono
                else:
                    s = f"{c}*{mono}"
            else:
                s = str(c)
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self) -> str:
        return f"FieldElement(n={self.field.n}, {self.to_text()})"

    def to_json(self) -> dict:
        return {"n": self.field.n, "coeffs": [str(c) for c in self.coeffs], "text": self.to_text()}

    @classmethod
    def from_json(cls, data: Mapping) -> "FieldElement":
        return FieldElement(cyclotomic_field(int(data["n"])), [Fraction(c) for c in data["coeffs"]])


# rational polynomial helpers for the inverse (lists of Fractions, constant first)


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        q[k - db] = c
        if c:
            for j, y in enumerate(b):
                a[k - db + j] -= c * y
    return _trim(q) or [Fraction(0)], _trim(a[:db])


def _qpoly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out) or [Fraction(0)]


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out]) or [Fraction(0)]


def extend_field(a: FieldElement, factor: int) -> FieldElement:
    """Re-express ``a`` in Q(zeta_{n*factor}) via zeta_n -> zeta_{n*factor}^factor."""
    if factor < 1:
        raise ValueError("factor must be >= 1")
    if factor == 1:
        return a
    big = cyclotomic_field(a.field.n * factor)
    vec = [0] * (factor * (len(a.num) - 1) + 1)
    for k, c in enumerate(a.num):
        vec[k * factor] = c
    return FieldElement._make(big, big.reduce(vec), a.den)


def lift(a: FieldElement, field: CyclotomicField) -> FieldElement:
    """Embed ``a`` into a cyclotomic field whose order is a multiple of a's."""
    if field.n % a.field.n:
        raise FieldMismatch(f"Q(zeta_{a.field.n}) does not embed in Q(zeta_{field.n})", "ring.extend_field")
    return extend_field(a, field.n // a.field.n)


def is_integral(a: FieldElement) -> bool:
    """True iff ``a`` lies in Z[zeta_n] (the power basis is an integral basis)."""
    return a.den == 1


# ---------------------------------------------------------------------------
# Laurent polynomials in A


class LaurentPolynomial:
    """Integer Laurent polynomial in the variable A, stored sparsely."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial({-e * -k: c ** -k})
        out = LaurentPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in sorted(self.terms.items()))

    def specialize(self, A: FieldElement) -> FieldElement:
        """Substitute a field element (a root of unity in practice) for A."""
        field = A.field
        out = field.zero()
        inv = A.inverse()
        for e, c in self.terms.items():
            out = out + (A ** e if e >= 0 else inv ** (-e)) * c
        return out

    def __call__(self, x: complex) -> complex:
        return sum(c * x ** e for e, c in self.terms.items())


# ---------------------------------------------------------------------------
# polynomials over F_p (lists, constant first, trimmed)


def fp_trim(a: list[int], p: int) -> list[int]:
    return _trim([c % p for c in a])


def fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a, b = fp_trim(a, p), fp_trim(b, p)
    if not b:
        raise DivisionByZero("division by zero polynomial over F_p", "ring.in_ideal")
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            q[k - db] = c
            for j, y in enumerate(b):
                a[k - db + j] = (a[k - db + j] - c * y) % p
    return _trim(q), _trim(a[:db])


def fp_monic(a: list[int], p: int) -> list[int]:
    a = fp_trim(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = fp_trim(a, p), fp_trim(b, p)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    return fp_trim(_ipoly_mul(a, b), p)


def fp_inverse_mod(a: list[int], m: list[int], p: int) -> list[int] | None:
    """Inverse of a modulo m over F_p, or None when gcd(a, m) != 1."""
    r0, r1 = fp_trim(m, p), fp_trim(a, p)
    s0, s1 = [], [1]
    while r1:
        q, r = fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        qs = fp_mul(q, s1, p)
        n = max(len(s0), len(qs))
        s0, s1 = s1, fp_trim([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(n)], p)
    if len(r0) != 1:
        return None
    inv = pow(r0[0], -1, p)
    return fp_divmod([c * inv for c in s0], m, p)[1]


# ---------------------------------------------------------------------------
# the ideal J_p


@dataclass(frozen=True)
class IdealJp:
    """J_p reduced to its single generator g in F_p[x]/(Phi_n mod p).

    ``g`` is monic, constant term first; ``vacuous`` means g = 1, in which case
    J_p is the whole ring and every membership test passes trivially.
    """

    p: int
    n: int
    g: tuple[int, ...]
    vacuous: bool

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "g": list(self.g), "vacuous": self.vacuous}


def _reduce_mod_p(a: FieldElement, p: int) -> list[int]:
    if not is_integral(a):
        raise NotIntegral(f"{a.to_text()} is not in Z[zeta_{a.field.n}]", "ring.jp_generator")
    return fp_trim(list(a.num), p)


def jp_generator(p: int, dims: Sequence[FieldElement], field: CyclotomicField | None = None) -> IdealJp:
    """Generator of J_p = (p, d^p - d for d in dims) modulo p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if field is None:
        if not dims:
            raise ValueError("field required when dims is empty")
        field = dims[0].field
    phibar = fp_trim(list(field.phi), p)
    g = fp_monic(phibar, p)
    for d in dims:
        if d.field.n != field.n:
            raise FieldMismatch("dims must share the ideal's field", "ring.jp_generator")
        gen = _reduce_mod_p(d ** p - d, p)
        g = fp_gcd(g, gen, p)
    return IdealJp(p=p, n=field.n, g=tuple(g), vacuous=len(g) == 1)


def in_ideal(x: FieldElement, J: IdealJp) -> bool:
    """Decide x in J_p (after localising at denominators prime to p).

    Raises NonInvertibleDenominator when the integer denominator of x is
    divisible by p; that verdict is indeterminate rather than false.
    """
    if x.field.n != J.n:
        raise FieldMismatch(f"element in Q(zeta_{x.field.n}), ideal over n={J.n}", "ring.in_ideal")
    p = J.p
    phibar = fp_trim(list(x.field.phi), p)
    s_inv = fp_inverse_mod([x.den], phibar, p)
    if s_inv is None:
        raise NonInvertibleDenominator(
            f"denominator {x.den} is not invertible modulo {p}", "ring.in_ideal"
        )
    h = fp_divmod(fp_mul(list(x.num), s_inv, p), phibar, p)[1]
    if J.vacuous:
        return True
    return not fp_divmod(h, list(J.g), p)[1]
