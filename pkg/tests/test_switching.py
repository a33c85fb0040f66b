import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixspec.classify.families import cycle_graph
from mixspec.core import MixedGraph, converse
from mixspec.harness.cospectral import complete_bipartite
from mixspec.harness.orientations import enumerate_orientations
from mixspec.nmatrix import charpoly
from mixspec.switching import (
    AdmissiblePartition,
    SwitchingError,
    SwitchingFunction,
    apply_switching,
    switching_equivalent,
    switching_isomorphic,
    switching_key,
    three_way_switch,
    twin_pairs,
    twin_reduction,
    two_way_switch,
    underlying_cospectral,
)
from strategies import mixed_graphs


@st.composite
def graph_and_theta(draw):
    M = draw(mixed_graphs(n_max=7))
    theta = draw(st.lists(st.integers(0, 5), min_size=M.n, max_size=M.n))
    return M, theta


def _try(M, theta):
    try:
        return apply_switching(M, theta)
    except SwitchingError:
        return None


@given(graph_and_theta())
def test_switching_preserves_charpoly_and_class(data):
    M, theta = data
    S = _try(M, theta)
    if S is None:
        return
    assert charpoly(S) == charpoly(M)
    assert switching_key(S) == switching_key(M)
    verdict = switching_equivalent(M, S)
    assert verdict
    src = converse(M) if verdict.used_converse else M
    assert apply_switching(src, verdict.theta) == S


@given(graph_and_theta())
def test_three_way_admissibility_is_mixedness(data):
    M, theta = data
    expected = _try(M, theta)
    try:
        got = three_way_switch(M, AdmissiblePartition(tuple(theta)))
    except SwitchingError:
        got = None
    assert got == expected


@given(mixed_graphs(n_max=6), st.data())
def test_two_way_rule(M, data):
    W = data.draw(st.sets(st.integers(0, M.n - 1), min_size=1))
    forbidden = any(t not in W and h in W for t, h in M.arcs())
    if forbidden:
        with pytest.raises(SwitchingError) as exc:
            two_way_switch(M, W)
        tail, head = exc.value.edge
        assert tail not in W and head in W
    else:
        S = two_way_switch(M, W)
        assert charpoly(S) == charpoly(M)


def test_two_way_example():
    # undirected edges U-W become arcs U->W, arcs W->U become undirected
    M = MixedGraph.from_arcs(3, undirected=[(0, 1)], arcs=[(2, 0)])
    S = two_way_switch(M, {1, 2})
    assert S.gain(0, 1) == 1 and S.gain(0, 2) == 0
    with pytest.raises(ValueError):
        two_way_switch(M, set())


@given(mixed_graphs(n_max=7))
def test_converse_is_equivalent(M):
    verdict = switching_equivalent(M, converse(M))
    assert verdict
    assert charpoly(converse(M)) == charpoly(M)


def test_failed_switch_names_edge():
    M = cycle_graph(3)
    with pytest.raises(SwitchingError) as exc:
        apply_switching(M, [0, 3, 0])
    assert exc.value.edge == (0, 1)
    with pytest.raises(ValueError):
        apply_switching(M, [0, 0])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cycles_fall_into_four_classes(n):
    orientations = list(enumerate_orientations(cycle_graph(n).underlying()))
    assert len(orientations) == 3**n
    keys = {switching_key(M) for M in orientations}
    assert len(keys) == 4
    assert len(list(enumerate_orientations(cycle_graph(n).underlying(), "switching"))) == 4


def test_inequivalent_reasons():
    assert switching_equivalent(cycle_graph(4), cycle_graph(3)).reason == "underlying mismatch"
    v = switching_equivalent(cycle_graph(4, "+"), cycle_graph(4, "="))
    assert not v and v.render().startswith("equivalent: no")


def test_switching_isomorphic_finds_relabelling():
    A = cycle_graph(5, "+")
    B = A.relabel([2, 4, 1, 0, 3])
    perm, verdict = switching_isomorphic(A, B)
    assert verdict and switching_equivalent(A.relabel(perm), B)
    assert switching_isomorphic(cycle_graph(5, "+"), cycle_graph(5, "-")) is None


def test_twins_and_reduction():
    K = complete_bipartite(2, 3)
    pairs = {(u, v) for u, v, _ in twin_pairs(K)}
    assert pairs == {(0, 1), (2, 3), (2, 4), (3, 4)}
    red = twin_reduction(K)
    assert red.reduced.n == 2 and red.reduced.m == 1
    assert red.kept == (0, 2)
    assert red.representative_map == (0, 0, 2, 2, 2)


def test_underlying_cospectral():
    assert underlying_cospectral(cycle_graph(4, "=")).equivalent is False
    assert underlying_cospectral(MixedGraph.from_arcs(3, arcs=[(0, 1), (1, 2)])).equivalent
    with pytest.raises(ValueError):
        underlying_cospectral(MixedGraph(2))


def test_switching_function_reduces_mod_six():
    assert SwitchingFunction((7, -1)).theta == (1, 5)
    assert AdmissiblePartition.from_parts(3, {0: [0], 1: [1, 2]}).labels == (0, 1, 1)
    with pytest.raises(ValueError):
        AdmissiblePartition.from_parts(3, {0: [0]})


@given(mixed_graphs(n_max=7, connected=True), st.permutations(range(7)))
def test_twin_reduction_independent_of_merge_order(M, perm):
    # relabelling changes which twin pair is merged first
    perm = [p for p in perm if p < M.n]
    a = twin_reduction(M).reduced
    b = twin_reduction(M.relabel(perm)).reduced
    assert a.n == b.n and switching_isomorphic(a, b) is not None


def test_twin_reduction_on_blown_up_triangle():
    # K_{2,2,1}: both pairs of opposite vertices are twins
    M = MixedGraph(5, ((0, 2, 0), (0, 3, 0), (0, 4, 1), (1, 2, 0), (1, 3, 0), (1, 4, 1), (2, 4, 0), (3, 4, 0)))
    red = twin_reduction(M)
    assert red.reduced.n == 3 and red.reduced.m == 3
