"""Modular data (colors, dimensions, twists, rank) for the Temperley-Lieb family.

Conventions follow the Kauffman bracket: the loop value is -A^2 - A^-2, the
color-c dimension is d_c = (-1)^c [c+1] and the twist is
theta_c = (-1)^c A^(c^2 + 2c), with A a primitive 4r-th root of unity.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegenerateDatum, RankNotFound
from .ring import CyclotomicField, FieldElement, cyclotomic_field, extend_field, lift

MAX_DOUBLINGS = 3


def quantum_integer(m: int, A: FieldElement) -> FieldElement:
    """[m] = (A^2m - A^-2m)/(A^2 - A^-2), summed as A^(2m-2) + A^(2m-6) + ... + A^(2-2m)."""
    if m < 0:
        return -quantum_integer(-m, A)
    out = A.field.zero()
    for j in range(m):
        out = out + A ** (2 * m - 2 - 4 * j)
    return out


@dataclass(frozen=True, eq=False)
class ModularDatum:
    """Presentation of a modular category by its numerical data.

    ``field`` contains the rank D; skein computations run in the (possibly
    smaller) ``base_field`` Q(zeta_4r) and are lifted with :meth:`lift`.
    """

    r: int | None
    colors: tuple[int, ...]
    field: CyclotomicField
    base_field: CyclotomicField
    dims: tuple[FieldElement, ...]
    twists: tuple[FieldElement, ...]
    rank_D: FieldElement
    delta_minus: FieldElement
    kappa: FieldElement
    A: FieldElement | None = None
    base_A: FieldElement | None = None
    base_dims: tuple[FieldElement, ...] = dc_field(default=())
    base_twists: tuple[FieldElement, ...] = dc_field(default=())

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def is_tl(self) -> bool:
        return self.base_A is not None

    @property
    def ident(self) -> dict:
        return {"r": self.r, "n": self.field.n, "base_n": self.base_field.n}

    def lift(self, x: FieldElement) -> FieldElement:
        return lift(x, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModularDatum):
            return NotImplemented
        return (
            self.r == other.r
            and self.field == other.field
            and self.dims == other.dims
            and self.twists == other.twists
            and self.rank_D == other.rank_D
            and self.delta_minus == other.delta_minus
            and self.kappa == other.kappa
        )

    def __hash__(self) -> int:
        return hash((self.r, self.field.n, self.dims, self.twists, self.rank_D))

    def describe(self) -> dict:
        def approx(x: FieldElement) -> str:
            z = complex(x)
            if abs(z.imag) < 1e-12:
                return f"{z.real:.12g}"
            return f"{z.real:.12g}{z.imag:+.12g}i"

        return {
            "r": self.r,
            "n": self.field.n,
            "colors": len(self.colors),
            "dims": [approx(d) for d in self.dims],
            "twists": [approx(t) for t in self.twists],
            "D": approx(self.rank_D),
            "D_squared": approx(self.rank_D * self.rank_D),
            "Delta": approx(self.delta_minus),
            "kappa": approx(self.kappa),
            "exact": {
                "dims": [d.to_json() for d in self.dims],
                "twists": [t.to_json() for t in self.twists],
                "D": self.rank_D.to_json(),
                "Delta": self.delta_minus.to_json(),
                "kappa": self.kappa.to_json(),
            },
        }


# ---------------------------------------------------------------------------
# rank search


def _sqrt_in_field(X: FieldElement, max_denominator: int = 10**6) -> FieldElement | None:
    """Exact square root of X in its own field, or None.

    Every embedding of a square root is +-sqrt of the corresponding embedding
    of X; enumerate the sign choices over embeddings modulo complex
    conjugation, solve the linear system for power-basis coefficients and
    round to rationals. The identity embedding gets the principal root.
    """
    field = X.field
    n, d = field.n, field.degree
    if d == 1:
        reps = [1]
    else:
        reps = [a for a in range(1, n) if math.gcd(a, n) == 1 and 2 * a < n]
    rows = []
    for a in reps:
        angles = [2 * math.pi * a * k / n for k in range(d)]
        rows.append([math.cos(t) for t in angles])
        if d > 1:
            rows.append([math.sin(t) for t in angles])
    M = np.array(rows)
    Minv = np.linalg.inv(M)
    roots = [cmath.sqrt(X.embed(a)) for a in reps]
    for signs in itertools.product((1, -1), repeat=len(reps) - 1):
        t = []
        for s, w in zip((1,) + signs, roots):
            t.append(s * w.real)
            if d > 1:
                t.append(s * w.imag)
        c = Minv @ np.array(t)
        cand = [Fraction(float(x)).limit_denominator(max_denominator) for x in c]
        if any(abs(float(q) - x) > 1e-7 for q, x in zip(cand, c)):
            continue
        D = FieldElement(field, cand)
        if D * D == X:
            return D
    return None


def find_rank(X: FieldElement, max_doublings: int = MAX_DOUBLINGS) -> FieldElement:
    """D with D^2 = X, doubling the field order until one exists (bounded)."""
    current = X
    for _ in range(max_doublings + 1):
        D = _sqrt_in_field(current)
        if D is not None:
            return D
        current = extend_field(current, 2)
    raise RankNotFound(
        f"no square root of {X.to_text()} up to Q(zeta_{current.field.n // 2})", "category.find_rank"
    )


def delta(dims: Sequence[FieldElement], twists: Sequence[FieldElement]) -> FieldElement:
    """Bracket of the -1 framed unknot: sum of d_c^2 / theta_c."""
    out = dims[0].field.zero()
    for d, t in zip(dims, twists):
        out = out + d * d * t.inverse()
    return out


def delta_plus(dims: Sequence[FieldElement], twists: Sequence[FieldElement]) -> FieldElement:
    out = dims[0].field.zero()
    for d, t in zip(dims, twists):
        out = out + d * d * t
    return out


def kappa(Delta: FieldElement, D: FieldElement) -> FieldElement:
    return Delta / D


def _check(datum: ModularDatum) -> None:
    one = datum.field.one()
    problems = []
    if datum.dims[0] != one:
        problems.append("d_0 != 1")
    if datum.twists[0] != one:
        problems.append("theta_0 != 1")
    if any(d.is_zero() for d in datum.dims):
        problems.append("zero dimension")
    if any(t.is_zero() or t * t.inverse() != one for t in datum.twists):
        problems.append("twist not invertible")
    D2 = sum((d * d for d in datum.dims), datum.field.zero())
    if datum.rank_D * datum.rank_D != D2:
        problems.append("D^2 != sum d_c^2")
    if datum.kappa * datum.rank_D != datum.delta_minus:
        problems.append("kappa * D != Delta")
    if delta_plus(datum.dims, datum.twists) * datum.delta_minus != D2:
        problems.append("Delta+ * Delta != D^2")
    if problems:
        raise DegenerateDatum("; ".join(problems), "category.make_tl_datum")


def make_tl_datum(r: int, max_doublings: int = MAX_DOUBLINGS) -> ModularDatum:
    """Temperley-Lieb / SU(2) datum at A = zeta_4r, colors 0..r-2."""
    if r < 3:
        raise ValueError("r must be at least 3")
    base = cyclotomic_field(4 * r)
    A = base.zeta(1)
    colors = tuple(range(r - 1))
    bdims = tuple(quantum_integer(c + 1, A) * (-1) ** c for c in colors)
    btwists = tuple(base.zeta(c * c + 2 * c) * (-1) ** c for c in colors)
    X = sum((d * d for d in bdims), base.zero())
    D = find_rank(X, max_doublings)
    field = D.field
    dims = tuple(lift(d, field) for d in bdims)
    twists = tuple(lift(t, field) for t in btwists)
    Delta = delta(dims, twists)
    datum = ModularDatum(
        r=r,
        colors=colors,
        field=field,
        base_field=base,
        dims=dims,
        twists=twists,
        rank_D=D,
        delta_minus=Delta,
        kappa=kappa(Delta, D),
        A=lift(A, field),
        base_A=A,
        base_dims=bdims,
        base_twists=btwists,
    )
    _check(datum)
    return datum


def validate_datum(
    dims: Sequence[FieldElement],
    twists: Sequence[FieldElement],
    rank_D: FieldElement | None = None,
) -> ModularDatum:
    """Build a datum from user-supplied dims and twists, enforcing the same invariants.

    Such data can feed the formulas and the ideal J_p, but not the skein engine.
    """
    if not dims or len(dims) != len(twists):
        raise DegenerateDatum("need equally many dims and twists", "category.validate_datum")
    base = dims[0].field
    if rank_D is None:
        X = sum((d * d for d in dims), base.zero())
        rank_D = find_rank(X)
    field = rank_D.field
    dims_l = tuple(lift(d, field) for d in dims)
    twists_l = tuple(lift(t, field) for t in twists)
    Delta = delta(dims_l, twists_l)
    if rank_D.is_zero():
        raise DegenerateDatum("zero rank", "category.validate_datum")
    datum = ModularDatum(
        r=None,
        colors=tuple(range(len(dims))),
        field=field,
        base_field=base,
        dims=dims_l,
        twists=twists_l,
        rank_D=rank_D,
        delta_minus=Delta,
        kappa=kappa(Delta, rank_D),
        base_dims=tuple(dims),
        base_twists=tuple(twists),
    )
    _check(datum)
    return datum
