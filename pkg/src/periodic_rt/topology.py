"""Link combinatorics: components and orientations, linking matrices, exact
signatures, freeness of periodic presentations, Tristram-Levine signatures.

Orientation convention: each component is traversed starting from its first
segment (lowest level, then leftmost), moving upward.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import MalformedDiagram, NotSymmetric, PrecisionFailure, SingularAtOmega
from .ring import _ipoly_mul, cyclotomic_polynomial, is_prime
from .tangle import SlicedTangle, closure, tangle_power

ORIENTATION_CONVENTION = "each component traversed upward from its first segment (lowest level, leftmost)"


@dataclass(frozen=True)
class Crossing:
    slice_index: int
    over: int  # component of the strand entering bottom-left for x+, bottom-right for x-
    under: int
    sign: int  # oriented crossing sign


@dataclass(frozen=True)
class LinkDiagram:
    diagram: SlicedTangle
    m: int
    orientation: tuple[int, ...]  # +1 / -1 per segment id
    crossings: tuple[Crossing, ...]

    @property
    def component_of_segment(self) -> tuple[int, ...]:
        return self.diagram.component_of_segment


def trace_components(diagram: SlicedTangle) -> LinkDiagram:
    """Components (numbered by first appearance) and their upward-first orientation."""
    if not diagram.is_closed:
        raise MalformedDiagram("trace_components needs a closed diagram", "topology.trace_components")
    comp = diagram.component_of_segment
    m = diagram.component_count
    sid = diagram.segment_id
    orient = [0] * diagram.segment_count
    nslices = len(diagram.slices)
    started: set[int] = set()
    for level, pos in diagram.segments():
        c = comp[sid(level, pos)]
        if c in started:
            continue
        started.add(c)
        k, j, up = level, pos, True
        while True:
            s = sid(k, j)
            if orient[s]:
                break
            orient[s] = 1 if up else -1
            if up:
                if k == nslices:
                    raise MalformedDiagram("strand leaves through the top", "topology.trace_components")
                nxt = diagram.pass_up(k, j)
                if nxt is None:
                    i = diagram.slices[k].pos
                    j, up = (i + 1 if j == i else i), False
                else:
                    k, j = k + 1, nxt
            else:
                if k == 0:
                    raise MalformedDiagram("strand leaves through the bottom", "topology.trace_components")
                nxt = diagram.pass_down(k, j)
                if nxt is None:
                    i = diagram.slices[k - 1].pos
                    j, up = (i + 1 if j == i else i), True
                else:
                    k, j = k - 1, nxt
    crossings = []
    for k, s in enumerate(diagram.slices):
        if not s.is_crossing:
            continue
        left, right = sid(k, s.pos), sid(k, s.pos + 1)
        sign = s.sign * orient[left] * orient[right]
        over, under = (left, right) if s.sign > 0 else (right, left)
        crossings.append(Crossing(k, comp[over], comp[under], sign))
    return LinkDiagram(diagram, m, tuple(orient), tuple(crossings))


def as_link(x) -> LinkDiagram:
    return x if isinstance(x, LinkDiagram) else trace_components(x)


def linking_matrix(link) -> list[list[int]]:
    """Framings (blackboard self-writhe) on the diagonal, linking numbers off it."""
    link = as_link(link)
    m = link.m
    twice = [[0] * m for _ in range(m)]
    for c in link.crossings:
        if c.over == c.under:
            twice[c.over][c.over] += 2 * c.sign
        else:
            twice[c.over][c.under] += c.sign
            twice[c.under][c.over] += c.sign
    for row in twice:
        for v in row:
            if v % 2:
                raise MalformedDiagram("odd inter-component crossing count", "topology.linking_matrix")
    return [[v // 2 for v in row] for row in twice]


def submatrix(B: Sequence[Sequence[int]], idx: Sequence[int]) -> list[list[int]]:
    return [[B[i][j] for j in idx] for i in idx]


def signature(B: Sequence[Sequence[int]]) -> int:
    """Signature by exact symmetric Gaussian elimination over Q."""
    n = len(B)
    M = [[Fraction(x) for x in row] for row in B]
    if any(len(row) != n for row in M):
        raise NotSymmetric("matrix is not square", "topology.signature")
    for i in range(n):
        for j in range(i):
            if M[i][j] != M[j][i]:
                raise NotSymmetric(f"entry ({i},{j}) != ({j},{i})", "topology.signature")
    sig = 0
    while M:
        size = len(M)
        piv = next((i for i in range(size) if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(size) for j in range(size) if M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence by (row i += row j, col i += col j) makes M[i][i] = 2 M[i][j]
            for c in range(size):
                M[i][c] += M[j][c]
            for r in range(size):
                M[r][i] += M[r][j]
            piv = i
        p = M[piv][piv]
        sig += 1 if p > 0 else -1
        rest = [r for r in range(size) if r != piv]
        M = [[M[r][c] - M[r][piv] * M[piv][c] / p for c in rest] for r in rest]
    return sig


# ---------------------------------------------------------------------------
# periodic presentations


@dataclass(frozen=True)
class FreenessReport:
    p: int
    passed: bool
    m: int
    m_star: int
    winding: tuple[int, ...]  # strand passes of each orbit-link component through the tangle

    @property
    def winding_divisible(self) -> bool:
        return all(w % self.p == 0 for w in self.winding)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "passed": self.passed,
            "m": self.m,
            "m_star": self.m_star,
            "winding": list(self.winding),
            "winding_divisible_by_p": self.winding_divisible,
        }


def freeness_check(T: SlicedTangle, p: int) -> FreenessReport:
    """Does Z_p act freely on the components of closure(T^p)? Tested by m(L) == p m(L*)."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    L_star = closure(T)
    L = closure(tangle_power(T, p))
    m_star, m = L_star.component_count, L.component_count
    l = T.bottom_arity
    winding = [0] * m_star
    for j in range(l):
        winding[L_star.component(l, j)] += 1
    return FreenessReport(p, m == p * m_star, m, m_star, tuple(winding))


# ---------------------------------------------------------------------------
# Seifert matrices


def _int_det(M: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def alexander_polynomial(V: Sequence[Sequence[int]]) -> list[int]:
    """det(V - t V^T) as integer coefficients, constant term first (exact interpolation)."""
    n = len(V)
    pts = list(range(n + 1))
    vals = [_int_det([[V[i][j] - t * V[j][i] for j in range(n)] for i in range(n)]) for t in pts]
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(pts):
            if j != i:
                basis = [Fraction(0)] + basis  # multiply by t
                for k in range(len(basis) - 1):
                    basis[k] -= xj * basis[k + 1]
                denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += vals[i] * b / denom
    out = [int(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _divisible_by_cyclotomic(poly: list[int], p: int) -> bool:
    phi = cyclotomic_polynomial(p)
    a = list(poly)
    d = len(phi) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for j, y in enumerate(phi):
                a[k - d + j] -= c * y
    return not any(a[:d])


def tristram_levine(V: Sequence[Sequence[int]], p: int, k: int) -> int:
    """Signature of (1 - w) V + (1 - conj w) V^T at w = exp(2 pi i k / p)."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if not 1 <= k <= p - 1:
        raise ValueError(f"k must lie in 1..{p - 1}")
    n = len(V)
    if n == 0:
        return 0
    if any(len(row) != n for row in V):
        raise MalformedDiagram("Seifert matrix must be square", "topology.tristram_levine")
    alex = alexander_polynomial(V)
    if not any(alex) or _divisible_by_cyclotomic(alex, p):
        raise SingularAtOmega(f"exp(2 pi i {k}/{p}) is a root of the Alexander polynomial", "topology.tristram_levine")
    w = cmath.exp(2j * math.pi * k / p)
    Vm = np.array(V, dtype=complex)
    H = (1 - w) * Vm + (1 - w.conjugate()) * Vm.T
    eig = np.linalg.eigvalsh(H)
    tol = 1e-8 * max(1.0, float(np.linalg.norm(H, 2)))
    if np.any(np.abs(eig) <= tol):
        raise PrecisionFailure("eigenvalue inside the certification margin", "topology.tristram_levine")
    return int(np.sum(eig > 0) - np.sum(eig < 0))


def total_signature(V: Sequence[Sequence[int]], p: int) -> int:
    """Minus the sum of the Tristram-Levine signatures at the nontrivial p-th roots of unity."""
    return -sum(tristram_levine(V, p, k) for k in range(1, p))
