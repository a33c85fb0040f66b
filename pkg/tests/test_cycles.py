import networkx as nx
import pytest
from hypothesis import given

from mixspec.classify.families import cycle_graph
from mixspec.core import MixedGraph, SimpleGraph, T6Element, converse
from mixspec.cycles import (
    REAL_PART,
    CycleClass,
    CycleDescriptor,
    canonical_rotation,
    classify_cycle,
    cospectral_by_real_weights,
    cycle_report,
    cycle_weight,
    enumerate_cycles,
    is_chordless,
    traversal_weight,
)
from strategies import mixed_graphs


@given(mixed_graphs(n_max=7))
def test_cycle_count_matches_networkx(M):
    G = M.underlying()
    ours = {c.vertices for c in enumerate_cycles(G)}
    theirs = {canonical_rotation(c) for c in nx.simple_cycles(G.to_networkx()) if len(c) >= 3}
    assert ours == theirs


def test_complete_graph_cycle_counts():
    K5 = SimpleGraph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    lengths = [c.length for c in enumerate_cycles(K5)]
    assert (lengths.count(3), lengths.count(4), lengths.count(5)) == (10, 15, 12)
    assert all(c.length <= 4 for c in enumerate_cycles(K5, 4))
    with pytest.raises(ValueError):
        enumerate_cycles(K5, 6)


@pytest.mark.parametrize(
    "kind, cls",
    [("", CycleClass.POSITIVE), ("+", CycleClass.SEMI_POSITIVE), ("-", CycleClass.SEMI_NEGATIVE), ("=", CycleClass.NEGATIVE)],
)
@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_named_cycle_classes(n, kind, cls):
    M = cycle_graph(n, kind)
    (c,) = enumerate_cycles(M.underlying())
    assert classify_cycle(cycle_weight(M, c)) is cls


@given(mixed_graphs(n_max=6))
def test_reversal_conjugates_weight(M):
    for c in enumerate_cycles(M.underlying()):
        w = traversal_weight(M, c.vertices)
        assert traversal_weight(M, tuple(reversed(c.vertices))) == w.conj()
        assert cycle_weight(converse(M), c) == w.conj()
        # the class, and so the real part, is direction free
        assert classify_cycle(w) is classify_cycle(w.conj())


def test_real_parts():
    for e in range(6):
        w = T6Element(e)
        assert REAL_PART[classify_cycle(w)] == w.to_eisenstein().real_part()


def test_descriptor_canonical_and_validation():
    assert CycleDescriptor((3, 1, 2)).vertices == (1, 2, 3)
    assert CycleDescriptor((2, 0, 3, 1)).vertices == (0, 2, 1, 3)
    with pytest.raises(ValueError):
        CycleDescriptor((0, 1))
    with pytest.raises(ValueError):
        CycleDescriptor((0, 1, 0))


def test_chordless():
    G = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    chordless = {c.vertices: is_chordless(G, c) for c in enumerate_cycles(G)}
    assert chordless == {(0, 1, 2): True, (0, 2, 3): True, (0, 1, 2, 3): False}


def test_cycle_weight_rejects_non_cycles():
    M = MixedGraph(3, ((0, 1, 0), (1, 2, 0)))
    with pytest.raises(ValueError):
        cycle_weight(M, CycleDescriptor((0, 1, 2)))


def test_report_lines():
    lines = cycle_report(cycle_graph(4, "="))
    assert lines == ["cycle: 0 1 2 3 class=Negative weight=w^3"]


def test_cospectral_by_real_weights():
    plus, minus = cycle_graph(5, "+"), cycle_graph(5, "-")
    assert cospectral_by_real_weights(plus, converse(plus)) == (True, "ok")
    ok, reason = cospectral_by_real_weights(plus, minus)
    assert not ok and reason.startswith("cycle")
    assert cospectral_by_real_weights(plus, cycle_graph(4)) == (False, "underlying-mismatch")
