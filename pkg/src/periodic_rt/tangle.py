"""Framed tangle diagrams as slice words (a Morse presentation read bottom to top).

Each slice is a cup, a cap or a crossing acting at a 0-based position. Between
slices sit *levels*; the strand segments of a level are addressed as
``(level, position)``. In a crossing ``x+ i`` the strand entering at the
bottom-left (position i) leaves at the top-right and passes over; ``x- i`` is
its mirror. With both strands oriented upward ``x+`` is a positive crossing.

Text format::

    strands: 2      # bottom arity
    x+ 0
    cup 2
    cap 1
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ArityMismatch, MalformedDiagram

KINDS = ("cup", "cap", "x+", "x-")


@dataclass(frozen=True)
class Slice:
    kind: str
    pos: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MalformedDiagram(f"unknown slice kind {self.kind!r}", "tangle.Slice")
        if self.pos < 0:
            raise MalformedDiagram(f"negative position {self.pos}", "tangle.Slice")

    @property
    def is_crossing(self) -> bool:
        return self.kind in ("x+", "x-")

    @property
    def sign(self) -> int:
        return {"x+": 1, "x-": -1}.get(self.kind, 0)

    def __str__(self) -> str:
        return f"{self.kind} {self.pos}"


def cup(i: int) -> Slice:
    return Slice("cup", i)


def cap(i: int) -> Slice:
    return Slice("cap", i)


def cross(i: int, sign: int = 1) -> Slice:
    return Slice("x+" if sign > 0 else "x-", i)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass(frozen=True)
class SlicedTangle:
    """A (bottom_arity, top_arity) framed tangle; (0, 0) tangles are link diagrams."""

    bottom_arity: int
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        if self.bottom_arity < 0:
            raise MalformedDiagram("negative bottom arity", "tangle.SlicedTangle")
        w = self.bottom_arity
        for k, s in enumerate(self.slices):
            if s.kind == "cup":
                if s.pos > w:
                    raise MalformedDiagram(f"slice {k}: cup {s.pos} out of range for width {w}", "tangle.SlicedTangle")
                w += 2
            elif s.kind == "cap":
                if s.pos + 1 >= w:
                    raise MalformedDiagram(f"slice {k}: cap {s.pos} out of range for width {w}", "tangle.SlicedTangle")
                w -= 2
            else:
                if s.pos + 1 >= w:
                    raise MalformedDiagram(f"slice {k}: {s.kind} {s.pos} out of range for width {w}", "tangle.SlicedTangle")

    # -- shape ------------------------------------------------------------

    @cached_property
    def widths(self) -> tuple[int, ...]:
        out = [self.bottom_arity]
        for s in self.slices:
            out.append(out[-1] + (2 if s.kind == "cup" else -2 if s.kind == "cap" else 0))
        return tuple(out)

    @property
    def top_arity(self) -> int:
        return self.widths[-1]

    @property
    def is_closed(self) -> bool:
        return self.bottom_arity == 0 and self.top_arity == 0

    @property
    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if s.is_crossing)

    @cached_property
    def _offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for w in self.widths:
            out.append(acc)
            acc += w
        return tuple(out)

    def segment_id(self, level: int, pos: int) -> int:
        return self._offsets[level] + pos

    @property
    def segment_count(self) -> int:
        return self._offsets[-1] + self.widths[-1]

    def segments(self) -> Iterable[tuple[int, int]]:
        for level, w in enumerate(self.widths):
            for pos in range(w):
                yield level, pos

    # -- connectivity -----------------------------------------------------

    def pass_up(self, k: int, j: int) -> int | None:
        """Position at level k+1 reached from (k, j) through slice k, or None at a cap."""
        s = self.slices[k]
        i = s.pos
        if s.kind == "cup":
            return j if j < i else j + 2
        if s.kind == "cap":
            if j in (i, i + 1):
                return None
            return j if j < i else j - 2
        if j == i:
            return i + 1
        if j == i + 1:
            return i
        return j

    def pass_down(self, k: int, j: int) -> int | None:
        """Position at level k-1 reached from (k, j) through slice k-1, or None at a cup."""
        s = self.slices[k - 1]
        i = s.pos
        if s.kind == "cup":
            if j in (i, i + 1):
                return None
            return j if j < i else j - 2
        if s.kind == "cap":
            return j if j < i else j + 2
        if j == i:
            return i + 1
        if j == i + 1:
            return i
        return j

    @cached_property
    def component_of_segment(self) -> tuple[int, ...]:
        """Component index per segment id, components numbered by first appearance."""
        uf = _UnionFind(self.segment_count)
        for k, s in enumerate(self.slices):
            w = self.widths[k]
            for j in range(w):
                up = self.pass_up(k, j)
                if up is not None:
                    uf.union(self.segment_id(k, j), self.segment_id(k + 1, up))
            if s.kind == "cup":
                uf.union(self.segment_id(k + 1, s.pos), self.segment_id(k + 1, s.pos + 1))
            elif s.kind == "cap":
                uf.union(self.segment_id(k, s.pos), self.segment_id(k, s.pos + 1))
        labels: dict[int, int] = {}
        out = []
        for sid in range(self.segment_count):
            root = uf.find(sid)
            if root not in labels:
                labels[root] = len(labels)
            out.append(labels[root])
        return tuple(out)

    @property
    def component_count(self) -> int:
        comps = self.component_of_segment
        return max(comps) + 1 if comps else 0

    def component(self, level: int, pos: int) -> int:
        return self.component_of_segment[self.segment_id(level, pos)]

    # -- text -------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"strands: {self.bottom_arity}"]
        lines += [str(s) for s in self.slices]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_text()


def parse_tangle(text: str) -> SlicedTangle:
    """Parse the line-oriented tangle format; errors name the offending line."""
    bottom = None
    slices: list[Slice] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("strands:"):
            if bottom is not None or slices:
                raise MalformedDiagram(f"line {lineno}: header must come first and once", "tangle.parse_tangle")
            try:
                bottom = int(line.split(":", 1)[1])
            except ValueError:
                raise MalformedDiagram(f"line {lineno}: bad strand count {raw!r}", "tangle.parse_tangle") from None
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in KINDS:
            raise MalformedDiagram(f"line {lineno}: expected 'cup|cap|x+|x- <pos>', got {raw!r}", "tangle.parse_tangle")
        try:
            pos = int(parts[1])
        except ValueError:
            raise MalformedDiagram(f"line {lineno}: bad position {parts[1]!r}", "tangle.parse_tangle") from None
        if pos < 0:
            raise MalformedDiagram(f"line {lineno}: negative position", "tangle.parse_tangle")
        slices.append(Slice(parts[0], pos))
    if bottom is None:
        bottom = 0
    try:
        return SlicedTangle(bottom, tuple(slices))
    except MalformedDiagram as exc:
        # translate slice index into a line number
        msg = str(exc.args[0])
        if msg.startswith("slice "):
            idx = int(msg.split()[1].rstrip(":"))
            count = -1
            for lineno, raw in enumerate(text.splitlines(), start=1):
                line = raw.split("#", 1)[0].strip()
                if line and not line.lower().startswith("strands:"):
                    count += 1
                    if count == idx:
                        raise MalformedDiagram(f"line {lineno}: {msg}", "tangle.parse_tangle") from None
        raise MalformedDiagram(msg, "tangle.parse_tangle") from None


# ---------------------------------------------------------------------------
# constructions


def braid_tangle(word: Sequence[int], strands: int) -> SlicedTangle:
    """Braid on ``strands`` strands; generator k (1-based) is x+ at k-1, -k is x- at k-1."""
    slices = []
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise MalformedDiagram(f"generator {g} invalid on {strands} strands", "tangle.braid_tangle")
        slices.append(cross(abs(g) - 1, 1 if g > 0 else -1))
    return SlicedTangle(strands, tuple(slices))


def identity(strands: int) -> SlicedTangle:
    return SlicedTangle(strands, ())


def compose(lower: SlicedTangle, upper: SlicedTangle) -> SlicedTangle:
    """Stack ``upper`` on top of ``lower``."""
    if lower.top_arity != upper.bottom_arity:
        raise ArityMismatch(
            f"top arity {lower.top_arity} != bottom arity {upper.bottom_arity}", "tangle.compose"
        )
    return SlicedTangle(lower.bottom_arity, lower.slices + upper.slices)


def tangle_power(omega: SlicedTangle, p: int) -> SlicedTangle:
    """``p`` copies of an endomorphism tangle stacked vertically."""
    if omega.bottom_arity != omega.top_arity:
        raise ArityMismatch(
            f"({omega.bottom_arity},{omega.top_arity}) tangle is not an endomorphism", "skein.tangle_power"
        )
    if p < 1:
        raise ValueError("p must be >= 1")
    return SlicedTangle(omega.bottom_arity, omega.slices * p)


def closure_prefix(l: int) -> tuple[Slice, ...]:
    return tuple(cup(j) for j in range(l))


def closure_suffix(l: int) -> tuple[Slice, ...]:
    return tuple(cap(j) for j in range(l - 1, -1, -1))


def closure(omega: SlicedTangle) -> SlicedTangle:
    """Planar closure: nested arcs on the right join top point i to bottom point i."""
    if omega.bottom_arity != omega.top_arity:
        raise ArityMismatch(
            f"({omega.bottom_arity},{omega.top_arity}) tangle has no closure", "skein.quantum_trace"
        )
    l = omega.bottom_arity
    return SlicedTangle(0, closure_prefix(l) + omega.slices + closure_suffix(l))


def distant_union(a: SlicedTangle, b: SlicedTangle) -> SlicedTangle:
    """Split union of two link diagrams (``b`` drawn after ``a``)."""
    if not (a.is_closed and b.is_closed):
        raise ArityMismatch("distant union needs closed diagrams", "tangle.distant_union")
    return SlicedTangle(0, a.slices + b.slices)


def unknot(framing: int = 0) -> SlicedTangle:
    """Unknot diagram with |framing| kinks of the framing's sign."""
    slices = [cup(0)]
    sign = 1 if framing > 0 else -1
    for _ in range(abs(framing)):
        slices += [cup(1), cross(0, sign), cap(1)]
    slices.append(cap(0))
    return SlicedTangle(0, tuple(slices))


def insert_kink(t: SlicedTangle, index: int, pos: int, sign: int = 1) -> SlicedTangle:
    """Insert a kink on the strand at ``pos`` just before slice ``index``.

    The kink is ``cup pos+1; x(sign) pos; cap pos+1``, which adds ``sign`` to the
    blackboard framing of that strand's component.
    """
    w = t.widths[index]
    if not 0 <= pos < w:
        raise MalformedDiagram(f"no strand {pos} at level {index}", "tangle.insert_kink")
    kink = (cup(pos + 1), cross(pos, sign), cap(pos + 1))
    return SlicedTangle(t.bottom_arity, t.slices[:index] + kink + t.slices[index:])


def mirror(t: SlicedTangle) -> SlicedTangle:
    return SlicedTangle(
        t.bottom_arity,
        tuple(Slice({"x+": "x-", "x-": "x+"}.get(s.kind, s.kind), s.pos) for s in t.slices),
    )


def power_component_map(omega: SlicedTangle, p: int) -> list[int]:
    """For closure(omega^p), the closure(omega) component under each component.

    Segments of the i-th stacked copy sit over the same positions as in
    omega, so the map is well defined; used to carry colorings and orbits.
    """
    l = omega.bottom_arity
    base = closure(omega)
    big = closure(tangle_power(omega, p))
    h = len(omega.slices)
    out: dict[int, int] = {}
    for level, w in enumerate(big.widths):
        if level < l or level > l + p * h:
            continue
        rel = level - l
        base_level = l + (rel % h if h else 0)
        if h and rel == p * h:
            base_level = l + h
        for pos in range(w):
            c = big.component(level, pos)
            if c not in out:
                out[c] = base.component(base_level, pos)
    return [out[c] for c in range(big.component_count)]
