import math

import pytest

from mixspec.classify import (
    NAMED,
    ExtremalMode,
    Family,
    FamilyParams,
    box_graph,
    build_family,
    catalog_members,
    cycle_graph,
    delta_bound_report,
    extremal_partition,
    matching_number,
    named_graph,
    path_graph,
    pendant_reduction_check,
    perfect_matching_class,
    pm_one_spectrum_recognize,
    rank2_recognize,
    rank3_recognize,
    rank_exact,
    small_radius_classify,
    y_tree,
)
from mixspec.classify.catalog import catalog_up_to
from mixspec.classify.rank import elimination_rank
from mixspec.core import EisensteinNumber, MixedGraph, SimpleGraph
from mixspec.harness.cospectral import complete_bipartite
from mixspec.harness.orientations import enumerate_orientations
from mixspec.nmatrix import eigenvalues, radius_strictly_below, spectral_radius
from mixspec.switching import twin_pairs

K4 = SimpleGraph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
DIRECTED_HEXAGON = MixedGraph.from_arcs(6, arcs=[(i, (i + 1) % 6) for i in range(6)])


# -- rank and nullity ---------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_path_nullity(n):
    assert rank_exact(path_graph(n)).nullity == n % 2


@pytest.mark.parametrize(
    "n, kind, nullity",
    [(6, "=", 2), (4, "", 2), (8, "", 2), (6, "", 0), (4, "=", 0), (10, "=", 2), (5, "+", 0), (7, "-", 0)],
)
def test_cycle_nullity(n, kind, nullity):
    assert rank_exact(cycle_graph(n, kind)).nullity == nullity


def test_tree_rank_is_twice_matching():
    for T in (y_tree(2, 2, 1), y_tree(3, 1, 1), complete_bipartite(1, 4)):
        for M in enumerate_orientations(T.underlying()):
            assert rank_exact(M).rank == 2 * matching_number(M)


def test_pendant_reduction():
    star = complete_bipartite(1, 3)
    assert pendant_reduction_check(star, 0, 1) and rank_exact(star).nullity == 2
    assert pendant_reduction_check(path_graph(4), 2, 3)
    tri = MixedGraph(4, ((0, 1, 0), (1, 2, 1), (0, 2, 0), (2, 3, 0)))
    assert pendant_reduction_check(tri, 2, 3) and rank_exact(tri).rank == 4
    with pytest.raises(ValueError):
        pendant_reduction_check(cycle_graph(4), 0, 1)
    with pytest.raises(ValueError):
        pendant_reduction_check(path_graph(4), 0, 2)


def test_elimination_rank_small():
    one, w = EisensteinNumber(1), EisensteinNumber(0, 1)
    zero = EisensteinNumber(0)
    # rows proportional by w
    assert elimination_rank([[one, w], [w, w * w]]) == 1
    assert elimination_rank([[zero, zero], [zero, zero]]) == 0


def test_rank2_recognize():
    m = rank2_recognize(complete_bipartite(2, 3, isolated=2))
    assert (m.a, m.b, m.t) == (2, 3, 2)
    switched = MixedGraph.from_arcs(4, arcs=[(0, 2), (0, 3), (1, 2), (1, 3)])
    m = rank2_recognize(switched)
    assert (m.a, m.b, m.t) == (2, 2, 0) and rank_exact(switched).rank == 2
    assert rank2_recognize(cycle_graph(4, "+")) is None
    assert rank_exact(cycle_graph(4, "+")).rank == 4


def test_rank3_triangle_and_k112():
    for M in enumerate_orientations(cycle_graph(3).underlying()):
        assert rank3_recognize(M) == "triangle" and rank_exact(M).rank == 3
    # K_{1,1,2}: 0 and 1 adjacent to everything, positive spanning quadrangle 0-2-1-3
    K112 = MixedGraph(4, ((0, 1, 1), (0, 2, 0), (0, 3, 0), (1, 2, 0), (1, 3, 0)))
    assert rank_exact(K112).rank == 3 and rank3_recognize(K112) == "triangle"
    with pytest.raises(ValueError):
        rank3_recognize(MixedGraph(2))


def test_rank3_k4_ef():
    tagged = [M for M in enumerate_orientations(K4) if rank3_recognize(M) == "K4-ef"]
    assert tagged
    for M in tagged:
        assert rank_exact(M).rank == 3 and not twin_pairs(M)


# -- Delta bound ----------------------------------------------------------------


def test_delta_bound_examples():
    K3 = cycle_graph(3)
    rep = delta_bound_report(K3)
    assert rep.bound_holds and rep.attains
    assert rep.extremal.mode is ExtremalMode.POSITIVE and set(rep.extremal.labels) == {0}
    rep = delta_bound_report(cycle_graph(3, "-"))
    assert rep.bound_holds and not rep.attains and rep.extremal is None
    rep = delta_bound_report(DIRECTED_HEXAGON)
    assert rep.attains and rep.extremal.verify(DIRECTED_HEXAGON)
    assert rep.extremal.render().startswith("extremal: mode=")


def test_negative_mode_extremal():
    # the negative triangle has spectrum {1, 1, -2}: rho = Delta attained by -Delta only
    tri = cycle_graph(3, "=")
    P = extremal_partition(tri)
    assert P.mode is ExtremalMode.NEGATIVE and P.verify(tri)
    assert delta_bound_report(tri).attains
    assert extremal_partition(cycle_graph(4, "=")) is None
    assert extremal_partition(path_graph(3)) is None


# -- families -------------------------------------------------------------------


def test_families():
    assert y_tree(2, 2, 1).n == 6 and radius_strictly_below(y_tree(2, 2, 1), 4)
    B = box_graph(0, 0, 0, 0)
    assert B.n == 4 and rank_exact(B).nullity == 0
    p = FamilyParams(Family.BOX, (2, 1, 0, 0))
    assert p.order() == 7 and build_family(p) == box_graph(2, 1, 0, 0)
    assert build_family(FamilyParams(Family.CYCLE, (4, "="))) == cycle_graph(4, "=")
    assert spectral_radius(eigenvalues(cycle_graph(4, "="))) == pytest.approx(math.sqrt(2))
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        cycle_graph(4, "?")
    with pytest.raises(ValueError):
        y_tree(0, 1, 1)


# -- small spectral radius ------------------------------------------------------------


@pytest.mark.parametrize(
    "M, alpha2, line",
    [
        (path_graph(2), 2, "radius<sqrt2: yes tag=P2"),
        (complete_bipartite(1, 3), 3, "radius<sqrt3: no"),
        (path_graph(5), 3, "radius<sqrt3: no"),
        (cycle_graph(7), 4, "radius<2: no"),
        (cycle_graph(4, "="), 3, "radius<sqrt3: yes tag=C4="),
        (box_graph(2, 0, 1, 0), 4, "radius<2: yes tag=Box_{2,0,1,0}"),
        (named_graph("H1"), 4, "radius<2: yes tag=H1"),
        (path_graph(2).disjoint_union(path_graph(1)), 2, "radius<sqrt2: yes tag=P1+P2"),
    ],
)
def test_small_radius_classify(M, alpha2, line):
    assert small_radius_classify(M, alpha2).render() == line


def test_classify_recognizes_switched_copies():
    # the arc-reversed, relabelled copy of Q17- is still tagged
    M = named_graph("Q17-")
    perm = list(reversed(range(M.n)))
    from mixspec.core import converse

    assert small_radius_classify(converse(M).relabel(perm), 4).catalog_tag == "Q17-"


def test_classify_untagged_graph():
    K33 = named_graph("K33-")
    rc = small_radius_classify(K33, 4)
    assert rc.below and rc.catalog_tag is None
    assert rc.render() == "radius<2: yes tag=none"
    with pytest.raises(AssertionError):
        small_radius_classify(K33, 4, strict=True)


def test_catalog_radii_and_membership():
    for name, entry in NAMED.items():
        rho = spectral_radius(eigenvalues(entry.graph))
        assert rho == pytest.approx(entry.quoted_radius, abs=1e-3), name
    for tag, C in catalog_up_to(4, 10):
        assert C.is_connected() and radius_strictly_below(C, 4), tag
    assert [t for t, _ in catalog_members(3, 4)] == ["P4", "C4="]
    with pytest.raises(ValueError):
        catalog_members(5, 3)
    with pytest.raises(KeyError):
        named_graph("Q99")


def test_pm_one_spectrum():
    two_k2 = path_graph(2).disjoint_union(path_graph(2))
    assert pm_one_spectrum_recognize(two_k2) and perfect_matching_class(two_k2)
    assert not pm_one_spectrum_recognize(path_graph(3))
    arc = MixedGraph.from_arcs(2, arcs=[(1, 0)])
    assert pm_one_spectrum_recognize(arc)
    assert not pm_one_spectrum_recognize(MixedGraph(1))
