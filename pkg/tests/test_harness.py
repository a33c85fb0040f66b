import io
import itertools

import numpy as np
import pytest

from mixspec.classify import cycle_graph, path_graph
from mixspec.core import MixedGraph, SimpleGraph, iter_graphs, serialize_graph
from mixspec.harness import SweepSpec, verify_suite
from mixspec.harness.cli import main
from mixspec.harness.cospectral import complete_bipartite, complete_multipartite, find_cospectral
from mixspec.harness.hereditary import (
    automorphisms,
    below,
    census,
    class_key,
    degree_prefilter,
    hereditary_orientations,
    rank_at_most,
)
from mixspec.harness.orientations import (
    connected_graphs,
    connected_up_to,
    enumerate_orientations,
    orientation,
    orientation_count,
    orientation_index,
)
from mixspec.harness.suites import SUITES, cached_table
from mixspec.harness.sweep import OrientationTable, build_table, switching_sweep
from mixspec.nmatrix import charpoly, radius_strictly_below
from mixspec.switching import SwitchingError, apply_switching, switching_key

K2 = path_graph(2).underlying()
C3 = cycle_graph(3).underlying()


# -- enumeration ------------------------------------------------------------------


def test_atlas_counts():
    # connected graphs on 1..7 vertices (OEIS A001349)
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    for G in connected_up_to(5):
        for k in range(1, G.n + 1):
            assert G.n == 1 or MixedGraph.undirected(G).induced(range(k)).is_connected()
    with pytest.raises(ValueError):
        connected_graphs(8)


def test_orientation_counts_and_dedupe():
    assert len(list(enumerate_orientations(K2))) == 3
    assert len(list(enumerate_orientations(C3))) == 27
    assert len(list(enumerate_orientations(C3, "switching"))) == 4
    assert len(list(enumerate_orientations(cycle_graph(4).underlying(), "switching"))) == 4
    with pytest.raises(ValueError):
        list(enumerate_orientations(C3, "bogus"))


def test_orientation_index_roundtrip():
    G = connected_graphs(4)[-1]
    for i, M in enumerate(enumerate_orientations(G)):
        assert orientation(G, i) == M and orientation_index(M) == i


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(n_max=13)
    with pytest.raises(ValueError):
        SweepSpec(dedupe="nope")
    with pytest.raises(ValueError):
        verify_suite("no-such-suite", SweepSpec())


# -- switching sweep --------------------------------------------------------------------


def _scalar_three_way_count(G: SimpleGraph) -> int:
    count = 0
    for M in enumerate_orientations(G):
        for rest in itertools.product(range(6), repeat=G.n - 1):
            try:
                apply_switching(M, (0,) + rest)
                count += 1
            except SwitchingError:
                pass
    return count


@pytest.mark.parametrize("G", [K2, C3, path_graph(3).underlying()])
def test_switching_sweep_matches_scalar_count(G):
    table = build_table(G)
    res = switching_sweep(table)
    assert res.violation is None
    assert res.three_way_checked == _scalar_three_way_count(G)
    assert res.converse_checked == orientation_count(G)


def test_switching_sweep_detects_corruption():
    table = build_table(C3)
    ids = table.ids.copy()
    ids[0] = len(table.polys)
    broken = OrientationTable(table.graph, ids, list(table.polys) + [charpoly(path_graph(3))])
    res = switching_sweep(broken)
    assert res.violation is not None


def test_table_routes_agree():
    G = connected_graphs(4)[3]
    a, b = build_table(G, "exact"), build_table(G, "subgraph")
    assert all(a.poly(i) == b.poly(i) == charpoly(orientation(G, i)) for i in range(orientation_count(G)))


# -- hereditary census ---------------------------------------------------------------------


def _brute(n_max, keep):
    reps, labelled = 0, 0
    for G in connected_up_to(n_max):
        autos = automorphisms(G)
        keys = set()
        for M in enumerate_orientations(G):
            if keep(M, charpoly(M)):
                labelled += 1
                keys.add(class_key(M, autos))
        reps += len(keys)
    return reps, labelled


@pytest.mark.parametrize("keep", [below(2), below(3), below(4), rank_at_most(2), rank_at_most(3)])
def test_census_matches_brute_force(keep):
    got = census(4, keep)
    assert (len(got.representatives), got.labelled_count) == _brute(4, keep)


def test_degree_prefilter_is_sound():
    for alpha2 in (2, 3, 4):
        pre = degree_prefilter(alpha2)
        for G in connected_up_to(5):
            if not pre(G):
                polys = cached_table(G, "exact", 1).polys
                assert not any(radius_strictly_below(P, alpha2) for P in polys)


def test_hereditary_orientations_empty():
    K4 = connected_graphs(4)[-1]
    assert K4.m == 6
    assert hereditary_orientations(K4, below(2)) == []


def test_small_censuses():
    assert len(census(6, below(2)).representatives) == 2
    assert len(census(6, below(3), degree_prefilter(3)).representatives) == 5


# -- cospectral grouping ------------------------------------------------------------------------


def test_bipartite_pair():
    rep = find_cospectral([complete_bipartite(4, 9), complete_bipartite(6, 6, isolated=1)])
    assert len(rep.classes) == 1 and rep.classes[0].subclasses == ((0,), (1,))
    assert len(rep.witnesses()) == 1


def test_tree_orientations_single_class():
    T = path_graph(4).underlying()
    graphs = list(enumerate_orientations(T))
    rep = find_cospectral(graphs)
    assert len(rep.classes) == 1 and len(rep.classes[0].subclasses) == 1


def test_positive_and_negative_quadrangles_differ():
    rep = find_cospectral([cycle_graph(4), cycle_graph(4, "=")])
    assert len(rep.classes) == 2 and not rep.witnesses()


def test_isomorphism_relation_merges_relabellings():
    A = cycle_graph(5, "+")
    B = A.relabel([1, 2, 3, 4, 0])
    assert len(find_cospectral([A, B], "isomorphism").classes[0].subclasses) == 1
    with pytest.raises(ValueError):
        find_cospectral([A], "other")


def test_tripartite_pair():
    K = complete_multipartite((8, 15, 1))
    S = complete_multipartite((3, 5, 16), {(0, 1): 1})
    assert charpoly(K) == charpoly(S)
    assert charpoly(K).coeffs[:4] == (1, 0, -143, -240)


def test_render_is_deterministic():
    graphs = [cycle_graph(4), cycle_graph(4, "="), cycle_graph(4, "+")]
    assert find_cospectral(graphs).render() == find_cospectral(graphs).render()
    assert find_cospectral(graphs).render().startswith("cospectral: classes=3 witnesses=0")


# -- suites ----------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", SUITES)
def test_every_suite_runs_small(name):
    report = verify_suite(name, SweepSpec(n_max=4, alpha2=3))
    assert report.passed, report.render()
    assert report.render().startswith(f"suite: {name} result=pass")


def test_radius_suite_reports_counterexample():
    report = verify_suite("radius-catalogs", SweepSpec(n_max=6, alpha2=4))
    assert not report.passed
    assert report.counterexample.n == 6 and report.counterexample.m == 9
    assert "counterexample:" in report.render()


# -- command line ---------------------------------------------------------------------------------


def _write(tmp_path, name, *graphs):
    p = tmp_path / name
    p.write_text("\n".join(serialize_graph(M) for M in graphs))
    return str(p)


def _run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_cli_spectrum_and_charpoly(tmp_path):
    f = _write(tmp_path, "tri.txt", cycle_graph(3, "-"))
    code, text = _run(["spectrum", f])
    assert code == 0 and text.splitlines()[1] == "charpoly: 1 0 -3 1"
    assert text.startswith("eigenvalues: 1.53208888624 0.347296355334 -1.87938524157")
    code, text = _run(["charpoly", f, "--method", "both"])
    assert text == "charpoly: 1 0 -3 1\ncharpoly-subgraph: 1 0 -3 1\n"


def test_cli_rank_and_classify(tmp_path):
    f = _write(tmp_path, "g.txt", complete_bipartite(2, 3, isolated=2), cycle_graph(3, "+"))
    code, text = _run(["rank", f])
    assert text.splitlines() == ["rank: 2 nullity=5 tag=K_{2,3}+2K1", "rank: 3 nullity=0 tag=triangle"]
    f = _write(tmp_path, "h.txt", cycle_graph(4, "="))
    assert _run(["classify", f, "--alpha2", "3"]) == (0, "radius<sqrt3: yes tag=C4=\n")


def test_cli_switch_equiv(tmp_path):
    hexagon = MixedGraph.from_arcs(6, arcs=[(i, (i + 1) % 6) for i in range(6)])
    a = _write(tmp_path, "a.txt", hexagon)
    b = _write(tmp_path, "b.txt", cycle_graph(6))
    code, text = _run(["switch-equiv", a, b])
    lines = text.splitlines()
    assert lines[0] == "equivalent: yes" and lines[1].startswith("theta: v0=w^0")
    c = _write(tmp_path, "c.txt", cycle_graph(6, "+"))
    assert _run(["switch-equiv", b, c])[1].startswith("equivalent: no")


def test_cli_enumerate(tmp_path):
    f = _write(tmp_path, "c3.txt", cycle_graph(3))
    code, text = _run(["enumerate", "--underlying", f, "--dedupe", "switching"])
    assert code == 0 and len(list(iter_graphs(text))) == 4
    code, text = _run(["enumerate", "--all-n", "3"])
    assert len(list(iter_graphs(text))) == 9 + 27


def test_cli_cospectral(tmp_path):
    d = tmp_path / "dir"
    d.mkdir()
    _write(d, "a.txt", complete_bipartite(4, 9))
    _write(d, "b.txt", complete_bipartite(6, 6, isolated=1))
    code, text = _run(["cospectral", "--inputs", str(d)])
    assert text.splitlines()[0] == "cospectral: classes=1 witnesses=1 relation=labelled"


def test_cli_verify_exit_codes():
    code, text = _run(["verify", "--suite", "nullity-cycles", "--nmax", "8"])
    assert code == 0 and text.startswith("suite: nullity-cycles result=pass")
    code, text = _run(["verify", "--suite", "radius-catalogs", "--nmax", "6", "--alpha2", "4"])
    assert code == 1 and "result=fail" in text


def test_cli_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n0 1 U\n0 1 F\n")
    assert _run(["rank", str(bad)])[0] == 2
    assert _run(["rank", str(tmp_path / "missing.txt")])[0] == 2
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nope", "--nmax", "3"], io.StringIO())


def test_reports_identical_across_worker_counts():
    one = verify_suite("charpoly-dual", SweepSpec(n_max=4, workers=1)).render()
    two = verify_suite("charpoly-dual", SweepSpec(n_max=4, workers=2)).render()
    assert one == two
    G = connected_graphs(4)[-1]
    assert np.array_equal(build_table(G, workers=1).ids, build_table(G, workers=2).ids)
