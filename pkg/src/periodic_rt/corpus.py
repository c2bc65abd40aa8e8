"""Small named diagrams and periodic instances used by tests and scripts."""

from __future__ import annotations

from .tangle import (
    SlicedTangle,
    braid_tangle,
    cap,
    closure,
    cross,
    cup,
    distant_union,
    insert_kink,
    unknot,
)


def braid_closure(word, strands: int) -> SlicedTangle:
    return closure(braid_tangle(word, strands))


def hopf(framings: tuple[int, int] = (0, 0)) -> SlicedTangle:
    """Positive Hopf link (closure of sigma_1^2) with kinks adding the given framings."""
    t = braid_closure([1, 1], 2)
    # level 2 holds strands 0,1 of the braid (right after the two closure cups)
    for comp_pos, f in ((1, framings[1]), (0, framings[0])):
        for _ in range(abs(f)):
            t = insert_kink(t, 2, comp_pos, 1 if f > 0 else -1)
    return t


def diagram_corpus() -> dict[str, SlicedTangle]:
    """Closed diagrams with at most 8 crossings."""
    c = {
        "unknot": unknot(0),
        "unknot+1": unknot(1),
        "unknot-1": unknot(-1),
        "unknot+2": unknot(2),
        "hopf": braid_closure([1, 1], 2),
        "hopf-negative": braid_closure([-1, -1], 2),
        "trefoil-right": braid_closure([1, 1, 1], 2),
        "trefoil-left": braid_closure([-1, -1, -1], 2),
        "figure-eight": braid_closure([1, -2, 1, -2], 3),
        "torus-link-2-4": braid_closure([1, 1, 1, 1], 2),
        "cinquefoil": braid_closure([1, 1, 1, 1, 1], 2),
        "hopf-chain": braid_closure([1, 1, 2, 2], 3),
        "torus-3-2-strands": braid_closure([1, 2, 1, 2], 3),
        "torus-link-3-3": braid_closure([1, 2, 1, 2, 1, 2], 3),
        "borromean": braid_closure([1, -2, 1, -2, 1, -2], 3),
        "unknot-4-strand": braid_closure([1, 2, 3], 4),
        "knot-4-strand": braid_closure([1, 2, 3, 1, 2, 3], 4),
        "eight-crossing": braid_closure([1, -2, 1, -2, 1, -2, 1, -2], 3),
        "mixed-3-strand": braid_closure([1, 1, 1, -2, 1, -2], 3),
        "unlink-2": distant_union(unknot(0), unknot(0)),
        "hopf+trefoil": distant_union(braid_closure([1, 1], 2), braid_closure([1, 1, 1], 2)),
        "nested-hopf": SlicedTangle(0, (cup(0), cup(2), cross(1, 1), cross(1, 1), cap(2), cap(0))),
        "r2-unlink": SlicedTangle(0, (cup(0), cup(2), cross(1, 1), cross(1, -1), cap(2), cap(0))),
        "kinked-hopf": hopf((1, -1)),
    }
    return c


def blowup_links() -> dict[str, SlicedTangle]:
    return {
        "trefoil-right": braid_closure([1, 1, 1], 2),
        "hopf": braid_closure([1, 1], 2),
        "figure-eight": braid_closure([1, -2, 1, -2], 3),
        "unknot+2": unknot(2),
    }


def handle_slide_pairs() -> list[tuple[str, SlicedTangle, SlicedTangle]]:
    """Pairs of framed links related by one handle slide.

    Sliding one component of a (1, 1)-framed unlink over the other yields a
    Hopf link with framings (2, 1); sliding a component of a (0, 0)-framed
    Hopf link over the other yields a Hopf link with framings (2, 0).
    """
    return [
        ("unlink(1,1) -> hopf(2,1)", distant_union(unknot(1), unknot(1)), hopf((2, 1))),
        ("hopf(0,0) -> hopf(2,0)", hopf((0, 0)), hopf((2, 0))),
        ("unlink(-1,-1) -> hopf-negative(-2,-1)", distant_union(unknot(-1), unknot(-1)),
         _negative_hopf((-2, -1))),
    ]


def _negative_hopf(framings: tuple[int, int]) -> SlicedTangle:
    t = braid_closure([-1, -1], 2)
    for comp_pos, f in ((1, framings[1]), (0, framings[0])):
        for _ in range(abs(f)):
            t = insert_kink(t, 2, comp_pos, 1 if f > 0 else -1)
    return t


# quotient tangles of the periodic suites: (name, braid word, strands, p, r values)
PERIODIC_SUITE = [
    ("s1s2", [1, 2], 3, 3, (3, 4)),
    ("(s1s2)^2", [1, 2, 1, 2], 3, 3, (3, 4)),
    ("s1s2s1^2", [1, 2, 1, 1], 3, 3, (3, 4)),
    ("s1s2s3s4", [1, 2, 3, 4], 5, 5, (3,)),
]


def periodic_instances():
    """Yield (name, quotient tangle, p, r)."""
    for name, word, strands, p, rs in PERIODIC_SUITE:
        for r in rs:
            yield name, braid_tangle(word, strands), p, r
