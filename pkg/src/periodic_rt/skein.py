"""Evaluation of colored framed link diagrams in the Kauffman bracket skein.

A colored diagram is cabled (color c -> c parallel strands, one Jones-Wenzl
projector per component) and then swept bottom to top. The sweep keeps a
linear combination of planar matchings of the current endpoints; crossings
are resolved by <x+> = A <id> + A^-1 <cup-cap> and closed loops contribute
-A^2 - A^-2.

Temperley-Lieb diagrams on k strands are partner tuples of length 2k: points
0..k-1 on the bottom, k..2k-1 on the top, both read left to right.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Mapping, Sequence

from .category import ModularDatum, quantum_integer
from .errors import ColorOutOfRange, MalformedDiagram, QuantumIntegerZero, WidthOverflow
from .ring import FieldElement
from .tangle import SlicedTangle, closure, power_component_map, tangle_power

DEFAULT_WIDTH_CAP = 16

TLDiagram = tuple  # partner tuple


# ---------------------------------------------------------------------------
# Temperley-Lieb algebra


def tl_identity(k: int) -> TLDiagram:
    return tuple(list(range(k, 2 * k)) + list(range(k)))


def tl_generator(i: int, k: int) -> TLDiagram:
    """e_i (0-based): caps bottom points i, i+1 and cups top points i, i+1."""
    if not 0 <= i < k - 1:
        raise ValueError(f"e_{i} undefined on {k} strands")
    d = list(tl_identity(k))
    d[i], d[i + 1] = i + 1, i
    d[k + i], d[k + i + 1] = k + i + 1, k + i
    return tuple(d)


def tl_compose(lower: TLDiagram, upper: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack ``upper`` on ``lower``; returns the diagram and the number of closed loops."""
    k = len(lower) // 2
    out = [-1] * (2 * k)
    seen_mid = [False] * k

    def walk(start_mid: int, going_up: bool) -> int:
        # traverse middle points until reaching the result's bottom or top
        m, up = start_mid, going_up
        while True:
            seen_mid[m] = True
            if up:
                t = upper[m]
                if t >= k:
                    return t
                m, up = t, False
            else:
                t = lower[k + m]
                if t < k:
                    return t
                m, up = t - k, True

    for b in range(k):
        t = lower[b]
        out[b] = t if t < k else walk(t - k, True)
    for j in range(k):
        t = upper[k + j]
        out[k + j] = t if t >= k else walk(t, False)
    loops = 0
    for m in range(k):
        if not seen_mid[m]:
            loops += 1
            start = m
            up = True
            while True:
                seen_mid[m] = True
                if up:
                    m, up = upper[m], False
                else:
                    m, up = lower[k + m] - k, True
                if m == start and up:
                    break
    return tuple(out), loops


def tl_tensor_id(x: TLDiagram) -> TLDiagram:
    """x with one extra through strand on the right."""
    k = len(x) // 2
    out = []
    for v in x[:k]:
        out.append(v if v < k else v + 1)
    out.append(2 * k + 1)
    for v in x[k:]:
        out.append(v if v < k else v + 1)
    out.append(k)
    return tuple(out)


def tl_mul(x: Mapping, y: Mapping, loop: FieldElement) -> dict:
    """Product in the TL algebra; ``x`` below ``y``."""
    out: dict = {}
    for dx, cx in x.items():
        for dy, cy in y.items():
            d, loops = tl_compose(dx, dy)
            c = cx * cy
            if loops:
                c = c * loop ** loops
            out[d] = out[d] + c if d in out else c
    return {d: c for d, c in out.items() if not c.is_zero()}


def loop_value(A: FieldElement) -> FieldElement:
    return -(A * A) - (A * A).inverse()


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors


_JW_CACHE: dict = {}
_JW_LOCK = threading.Lock()


def _signed_dim(j: int, A: FieldElement) -> FieldElement:
    return quantum_integer(j + 1, A) * (-1) ** j


def jones_wenzl_A(k: int, A: FieldElement) -> dict:
    """Expansion of f_k with coefficients in A's field (memoised per A)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    key = (A.field.n, A.num, A.den, k)
    cached = _JW_CACHE.get(key)
    if cached is not None:
        return cached
    if k == 1:
        result = {tl_identity(1): A.field.one()}
    else:
        prev = {tl_tensor_id(d): c for d, c in jones_wenzl_A(k - 1, A).items()}
        top = _signed_dim(k - 1, A)
        if top.is_zero():
            raise QuantumIntegerZero(f"[{k}] = 0, f_{k} does not exist at this root", "skein.jones_wenzl")
        ratio = _signed_dim(k - 2, A) / top
        loop = loop_value(A)
        e = {tl_generator(k - 2, k): A.field.one()}
        fef = tl_mul(tl_mul(prev, e, loop), prev, loop)
        result = dict(prev)
        for d, c in fef.items():
            v = result.get(d, A.field.zero()) - ratio * c
            if v.is_zero():
                result.pop(d, None)
            else:
                result[d] = v
    with _JW_LOCK:
        _JW_CACHE.setdefault(key, result)
    return _JW_CACHE[key]


def jones_wenzl(k: int, datum: ModularDatum) -> dict:
    """f_k for a Temperley-Lieb datum; admissible for 1 <= k <= r-2."""
    if not datum.is_tl:
        raise MalformedDiagram("skein evaluation needs a Temperley-Lieb datum", "skein.jones_wenzl")
    if datum.r is not None and k > datum.r - 2:
        raise QuantumIntegerZero(f"f_{k} is outside the admissible range 1..{datum.r - 2}", "skein.jones_wenzl")
    return jones_wenzl_A(k, datum.base_A)


# ---------------------------------------------------------------------------
# cabling


@dataclass(frozen=True)
class CabledDiagram:
    """Elementary operations after cabling.

    ``ops`` entries: ("cup", q), ("cap", q), ("x", q, sign), ("jw", q, k).
    """

    ops: tuple
    max_width: int

    @property
    def projectors(self) -> list[tuple[int, int, int]]:
        return [(idx, op[1], op[2]) for idx, op in enumerate(self.ops) if op[0] == "jw"]


def _colors_by_component(diagram: SlicedTangle, coloring, ncolors: int | None) -> list[int]:
    m = diagram.component_count
    if isinstance(coloring, Mapping):
        colors = [coloring.get(c) for c in range(m)]
    else:
        colors = list(coloring)
    if len(colors) != m or any(c is None for c in colors):
        raise ColorOutOfRange(f"coloring must assign all {m} components", "skein.cable")
    for c in colors:
        if not isinstance(c, int) or c < 0 or (ncolors is not None and c >= ncolors):
            raise ColorOutOfRange(f"color {c!r} out of range", "skein.cable")
    return colors


def cable(diagram: SlicedTangle, coloring, width_cap: int = DEFAULT_WIDTH_CAP, ncolors: int | None = None) -> CabledDiagram:
    """Replace color-c strands by c parallel strands; one projector per component."""
    if not diagram.is_closed:
        raise MalformedDiagram("cabling needs a closed diagram", "skein.cable")
    colors = _colors_by_component(diagram, coloring, ncolors)
    comp = diagram.component_of_segment
    sid = diagram.segment_id

    def level_colors(level: int) -> list[int]:
        return [colors[comp[sid(level, j)]] for j in range(diagram.widths[level])]

    def offset(lc: list[int], j: int) -> int:
        return sum(lc[:j])

    ops: list = []
    max_width = 0
    placed: set[int] = set()
    for k, s in enumerate(diagram.slices):
        lc = level_colors(k)
        max_width = max(max_width, sum(lc))
        i = s.pos
        if s.kind == "cup":
            c = colors[comp[sid(k + 1, i)]]
            q = offset(lc, i)
            ops += [("cup", q + j) for j in range(c)]
        elif s.kind == "cap":
            c = lc[i]
            q = offset(lc, i)
            ops += [("cap", q + j) for j in range(c - 1, -1, -1)]
        else:
            a, b = lc[i], lc[i + 1]
            q = offset(lc, i)
            for kk in range(a - 1, -1, -1):
                for j in range(b):
                    ops.append(("x", q + kk + j, s.sign))
        # projector on the first segment of each newly born component
        nlc = level_colors(k + 1)
        for j in range(diagram.widths[k + 1]):
            cj = comp[sid(k + 1, j)]
            if cj not in placed:
                placed.add(cj)
                if colors[cj] >= 2:
                    ops.append(("jw", offset(nlc, j), colors[cj]))
    if max_width > width_cap:
        raise WidthOverflow(f"cabled width {max_width} exceeds cap {width_cap}", "skein.cable")
    return CabledDiagram(tuple(ops), max_width)


# ---------------------------------------------------------------------------
# state propagation


def _remove_pair(m: list, i: int) -> tuple:
    out = []
    for j, v in enumerate(m):
        if j == i or j == i + 1:
            continue
        out.append(v if v < i else v - 2)
    return tuple(out)


def _cup(m: tuple, i: int) -> tuple:
    shifted = [v if v < i else v + 2 for v in m]
    return tuple(shifted[:i] + [i + 1, i] + shifted[i:])


def _cap(m: tuple, i: int) -> tuple[tuple, bool]:
    """Returns the new matching and whether a closed loop was formed."""
    a, b = m[i], m[i + 1]
    if a == i + 1:
        return _remove_pair(list(m), i), True
    lst = list(m)
    lst[a], lst[b] = b, a
    return _remove_pair(lst, i), False


def _cupcap(m: tuple, i: int) -> tuple[tuple, bool]:
    a, b = m[i], m[i + 1]
    if a == i + 1:
        return m, True
    lst = list(m)
    lst[a], lst[b] = b, a
    lst[i], lst[i + 1] = i + 1, i
    return tuple(lst), False


def _apply_tl(m: tuple, q: int, T: TLDiagram, k: int) -> tuple[tuple, int]:
    """Glue TL diagram T onto positions q..q+k-1 of the current matching."""
    w = len(m)
    out = list(m)
    seen = [False] * k

    def walk_from_bottom(b: int) -> int:
        # enter T at bottom point b; return the resulting endpoint position
        while True:
            seen[b] = True
            t = T[b]
            if t >= k:
                return q + t - k
            seen[t] = True
            s = m[q + t]
            if not q <= s < q + k:
                return s
            b = s - q

    for j in range(w):
        if q <= j < q + k:
            t = T[k + j - q]
            out[j] = q + t - k if t >= k else None  # filled below
            if t < k:
                s = m[q + t]
                seen[t] = True
                out[j] = s if not q <= s < q + k else walk_from_bottom(s - q)
        else:
            s = m[j]
            if q <= s < q + k:
                out[j] = walk_from_bottom(s - q)
    loops = 0
    for b in range(k):
        if not seen[b]:
            loops += 1
            cur = b
            while True:
                seen[cur] = True
                t = T[cur]
                seen[t] = True
                nxt = m[q + t] - q
                if nxt == b:
                    break
                cur = nxt
    return tuple(out), loops


def _accumulate(acc: dict, key, value: FieldElement) -> None:
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


def propagate(cabled: CabledDiagram, A: FieldElement) -> FieldElement:
    """Sweep the cabled diagram; returns the scalar left when all strands close."""
    field = A.field
    Ainv = A.inverse()
    loop = loop_value(A)
    states: dict = {(): field.one()}
    for op in cabled.ops:
        kind = op[0]
        new: dict = {}
        if kind == "cup":
            i = op[1]
            for m, c in states.items():
                new[_cup(m, i)] = c
        elif kind == "cap":
            i = op[1]
            for m, c in states.items():
                nm, closed = _cap(m, i)
                _accumulate(new, nm, c * loop if closed else c)
        elif kind == "x":
            i, sign = op[1], op[2]
            a_id, a_cc = (A, Ainv) if sign > 0 else (Ainv, A)
            for m, c in states.items():
                _accumulate(new, m, c * a_id)
                nm, closed = _cupcap(m, i)
                _accumulate(new, nm, c * a_cc * loop if closed else c * a_cc)
        elif kind == "jw":
            q, k = op[1], op[2]
            proj = jones_wenzl_A(k, A)
            for m, c in states.items():
                for T, t in proj.items():
                    nm, loops = _apply_tl(m, q, T, k)
                    v = c * t
                    if loops:
                        v = v * loop ** loops
                    _accumulate(new, nm, v)
        else:  # pragma: no cover
            raise MalformedDiagram(f"unknown op {op!r}", "skein.evaluate")
        states = {m: c for m, c in new.items() if not c.is_zero()}
    if not states:
        return field.zero()
    if list(states) != [()]:
        raise MalformedDiagram("diagram did not close up", "skein.evaluate")
    return states[()]


def evaluate_base(diagram: SlicedTangle, coloring, datum: ModularDatum, width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    """F of the colored diagram, in the datum's base field Q(zeta_4r)."""
    if not datum.is_tl:
        raise MalformedDiagram("skein evaluation needs a Temperley-Lieb datum", "skein.evaluate")
    if not diagram.is_closed:
        raise MalformedDiagram("evaluate needs a closed (0,0) diagram", "skein.evaluate")
    cabled = cable(diagram, coloring, width_cap, ncolors=len(datum.colors))
    return propagate(cabled, datum.base_A)


def evaluate(diagram: SlicedTangle, coloring, datum: ModularDatum, width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    """F(Gamma(L, coloring)) as an element of the datum's field."""
    return datum.lift(evaluate_base(diagram, coloring, datum, width_cap))


def quantum_trace(omega: SlicedTangle, coloring, datum: ModularDatum, width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    """Tr(omega) = F(closure of omega); coloring indexes components of the closure."""
    return evaluate(closure(omega), coloring, datum, width_cap)


def power_coloring(omega: SlicedTangle, coloring: Sequence[int], p: int) -> list[int]:
    """Coloring of closure(omega^p) induced from a coloring of closure(omega)."""
    return [coloring[c] for c in power_component_map(omega, p)]


def quantum_trace_power(omega: SlicedTangle, coloring: Sequence[int], p: int, datum: ModularDatum,
                        width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    """Tr(omega^p) with the periodic extension of ``coloring``."""
    return evaluate(closure(tangle_power(omega, p)), power_coloring(omega, coloring, p), datum, width_cap)
