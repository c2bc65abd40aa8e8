from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import braid_cycles, components, slice_list
from periodic_rt.corpus import diagram_corpus
from periodic_rt.errors import ArityMismatch, MalformedDiagram
from periodic_rt.tangle import (
    SlicedTangle,
    braid_tangle,
    cap,
    closure,
    cross,
    cup,
    identity,
    parse_tangle,
    power_component_map,
    tangle_power,
    unknot,
)


def braid_words(strands: int, max_len: int = 8):
    gens = [g for k in range(1, strands) for g in (k, -k)]
    return st.lists(st.sampled_from(gens), max_size=max_len)


def test_parse_round_trip():
    text = "strands: 2\nx+ 0\ncup 2\ncap 1\nx- 0\n"
    t = parse_tangle(text)
    assert t.bottom_arity == 2 and t.top_arity == 2
    assert parse_tangle(t.to_text()) == t


def test_parse_comments_and_blank_lines():
    t = parse_tangle("# a Hopf link\n\ncup 0\ncup 0  # inner\nx+ 1\nx+ 1\ncap 0\ncap 0\n")
    assert t.is_closed and t.component_count == 2


@pytest.mark.parametrize(
    "text,line",
    [
        ("cup 0\nbogus 1\ncap 0\n", 2),
        ("cup 0\ncup x\n", 2),
        ("cup 0\ncap 3\n", 2),
        ("cup 0\n\nx+ 1\n", 3),
        ("cup 0\nstrands: 2\n", 2),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(MalformedDiagram) as exc:
        parse_tangle(text)
    assert f"line {line}" in str(exc.value)
    assert "tangle.parse_tangle" in str(exc.value)


def test_width_profile_is_validated():
    with pytest.raises(MalformedDiagram):
        SlicedTangle(0, (cap(0),))
    with pytest.raises(MalformedDiagram):
        SlicedTangle(2, (cross(1, 1),))


def test_component_examples():
    assert SlicedTangle(0, (cup(0), cap(0), cup(0), cap(0))).component_count == 2
    assert closure(braid_tangle([1, 1, 1], 2)).component_count == 1
    assert closure(braid_tangle([1, 2] * 3, 3)).component_count == 3


def test_tangle_power_examples():
    for l in (1, 2, 3):
        assert tangle_power(identity(l), 2) == identity(l)
    assert closure(tangle_power(braid_tangle([1], 2), 3)).component_count == 1
    assert closure(tangle_power(braid_tangle([1, 2], 3), 3)).component_count == 3
    with pytest.raises(ArityMismatch):
        tangle_power(SlicedTangle(0, (cup(0),)), 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), braid_words(n))))
def test_braid_closure_components_match_permutation_oracle(case):
    strands, word = case
    t = closure(braid_tangle(word, strands))
    assert t.component_count == braid_cycles(word, strands)
    assert components(slice_list(t))[0] == t.component_count


def test_corpus_components_match_independent_recount():
    for name, t in diagram_corpus().items():
        m, comp = components(slice_list(t))
        assert m == t.component_count, name
        for level, pos in t.segments():
            assert comp[(level, pos)] == t.component(level, pos), name


def test_corpus_size_and_crossings():
    corpus = diagram_corpus()
    assert len(corpus) >= 20
    assert all(t.is_closed and t.crossing_count <= 8 for t in corpus.values())


@settings(max_examples=100, deadline=None)
@given(braid_words(3, 5), st.sampled_from([3, 5]))
def test_power_component_map_respects_components(word, p):
    omega = braid_tangle(word, 3)
    base = closure(omega)
    big = closure(tangle_power(omega, p))
    cmap = power_component_map(omega, p)
    assert len(cmap) == big.component_count
    assert set(cmap) == set(range(base.component_count))


def test_unknot_framing_kinks():
    assert unknot(0).crossing_count == 0
    assert unknot(-3).crossing_count == 3
    assert unknot(2).component_count == 1
