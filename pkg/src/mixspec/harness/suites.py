"""Named invariant suites run over a sweep, each reporting pass/fail and a counterexample."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ..classify.catalog import catalog_members
from ..classify.extremal import extremal_partition
from ..classify.families import cycle_graph
from ..classify.radius import catalog_tag
from ..classify.rank import rank2_recognize, rank3_recognize, rank_exact
from ..core import MixedGraph, SimpleGraph, iter_graphs, serialize_graph
from ..cycles import CycleClass, classify_cycle, traversal_weight
from ..nmatrix import (
    CharPoly,
    charpoly,
    cut_edge_residual,
    edge_recurrence_residual,
    radius_at_most,
    radius_equals,
    radius_strictly_below,
    vertex_recurrence_residual,
)
from ..switching import switching_isomorphic, switching_key
from .cospectral import complete_bipartite, complete_multipartite
from .hereditary import below, census, degree_prefilter, rank_at_most
from .orientations import SweepSpec, connected_graphs, connected_up_to, enumerate_orientations, orientation
from .sweep import build_table, switching_sweep

SUITES = (
    "charpoly-dual",
    "recurrences",
    "switching-invariance",
    "interlacing",
    "delta-bound",
    "rank-table",
    "nullity-cycles",
    "radius-catalogs",
    "cospectral-families",
)

RANDOM_INSTANCES = 200
FAMILY_ORDER_MAX = 10
CYCLE_SWEEP_MAX = 8


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    counterexample: MixedGraph | None = None

    def render(self) -> str:
        lines = [f"suite: {self.name} result={'pass' if self.passed else 'fail'} checked={self.checked}"]
        if self.detail:
            lines.append(f"detail: {self.detail}")
        if self.counterexample is not None:
            lines.append("counterexample:")
            lines.append(serialize_graph(self.counterexample).rstrip("\n"))
        return "\n".join(lines) + "\n"


class _Fail(Exception):
    def __init__(self, detail: str, graph: MixedGraph | None = None):
        super().__init__(detail)
        self.detail = detail
        self.graph = graph


def underlying_graphs(spec: SweepSpec) -> list[SimpleGraph]:
    if spec.underlying_source == "all":
        return connected_up_to(spec.n_max)
    out, seen = [], set()
    for path in spec.files:
        with open(path, encoding="utf-8") as fh:
            for M in iter_graphs(fh.read()):
                G = M.underlying()
                if G not in seen:
                    seen.add(G)
                    out.append(G)
    return out


@lru_cache(maxsize=None)
def cached_table(G: SimpleGraph, route: str, workers: int):
    return build_table(G, route, workers)


def _orientations(spec: SweepSpec, G: SimpleGraph):
    return enumerate_orientations(G, "switching" if spec.dedupe != "none" else "none")


# -- suites -----------------------------------------------------------------


def _charpoly_dual(spec: SweepSpec) -> int:
    checked = 0
    for G in underlying_graphs(spec):
        a, b = cached_table(G, "exact", spec.workers), cached_table(G, "subgraph", spec.workers)
        for i in range(len(a.ids)):
            if a.poly(i) != b.poly(i):
                raise _Fail(f"routes disagree: {a.poly(i)} vs {b.poly(i)}", orientation(G, i))
        checked += len(a.ids)
    return checked


def _recurrences(spec: SweepSpec) -> int:
    rng = random.Random(spec.seed)
    orders = [n for n in range(2, min(spec.n_max, 6) + 1) if connected_graphs(n)]
    checked = 0
    for _ in range(RANDOM_INSTANCES):
        G = rng.choice(connected_graphs(rng.choice(orders)))
        M = orientation(G, rng.randrange(3 ** G.m))
        for u in range(M.n):
            if not vertex_recurrence_residual(M, u).is_zero():
                raise _Fail(f"vertex recurrence fails at {u}", M)
            checked += 1
        for u, v, _ in M.edges:
            if not edge_recurrence_residual(M, u, v).is_zero():
                raise _Fail(f"edge recurrence fails at ({u}, {v})", M)
            checked += 1
            if not M.delete_edge(u, v).is_connected():
                if not cut_edge_residual(M, u, v).is_zero():
                    raise _Fail(f"cut-edge identity fails at ({u}, {v})", M)
                checked += 1
    return checked


def _switching_invariance(spec: SweepSpec) -> int:
    checked = 0
    for G in underlying_graphs(spec):
        res = switching_sweep(cached_table(G, "exact", spec.workers))
        checked += res.three_way_checked + res.two_way_checked + res.converse_checked
        if res.violation is not None:
            idx, theta, kind = res.violation
            raise _Fail(f"{kind} switching theta={theta} changes the polynomial", orientation(G, idx))
    return checked


def _hermitian_batch(G: SimpleGraph) -> np.ndarray:
    from .sweep import gain_array

    gains = gain_array(G)
    w = np.exp(1j * np.pi / 3) ** np.arange(6)
    H = np.zeros((gains.shape[0], G.n, G.n), dtype=complex)
    for e, (u, v) in enumerate(G.sorted_edges()):
        H[:, u, v] = w[gains[:, e] % 6]
        H[:, v, u] = np.conj(H[:, u, v])
    return H


def _interlacing(spec: SweepSpec) -> int:
    tol = 1e-9
    checked = 0
    for G in underlying_graphs(spec):
        if G.n < 2:
            continue
        H = _hermitian_batch(G)
        lam = np.linalg.eigvalsh(H)[:, ::-1]
        for v in range(G.n):
            keep = [x for x in range(G.n) if x != v]
            mu = np.linalg.eigvalsh(H[:, keep][:, :, keep])[:, ::-1]
            ok = (lam[:, :-1] >= mu - tol).all(axis=1) & (mu >= lam[:, 1:] - tol).all(axis=1)
            if not ok.all():
                raise _Fail(f"eigenvalues of M - {v} do not interlace", orientation(G, int(np.argmin(ok))))
            checked += len(ok)
    return checked


def _delta_bound(spec: SweepSpec) -> int:
    checked = 0
    for G in underlying_graphs(spec):
        table = cached_table(G, "exact", spec.workers)
        delta = G.max_degree()
        verdicts = [(radius_at_most(P, delta), G.n > 0 and radius_equals(P, delta)) for P in table.polys]
        for i in range(len(table.ids)):
            holds, attains = verdicts[table.ids[i]]
            M = orientation(G, i)
            if not holds:
                raise _Fail(f"rho exceeds Delta = {delta}", M)
            P = extremal_partition(M)
            if P is not None and not P.verify(M):
                raise _Fail("extremal partition fails its edge constraints", M)
            if attains != (P is not None):
                raise _Fail(f"rho = Delta is {attains} but a partition {'was' if P else 'was not'} found", M)
            checked += 1
    return checked


def _rank_of(P: CharPoly) -> int:
    return P.degree - P.zero_multiplicity()


def _rank_table(spec: SweepSpec) -> int:
    """Rank cross-check, the rank-2 and rank-3 recognizers, and induced-subgraph monotonicity."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    rng = random.Random(spec.seed)
    checked = 0
    graphs = [SimpleGraph.from_edges(H.number_of_nodes(), H.edges()) for H in graph_atlas_g()
              if 1 <= H.number_of_nodes() <= spec.n_max]
    for G in graphs:
        connected = nx.is_connected(G.to_networkx())
        for M in _orientations(spec, G):
            r = rank_exact(M).rank
            if (r == 2) != (rank2_recognize(M) is not None):
                raise _Fail(f"rank {r} but the rank-2 recognizer disagrees", M)
            if connected and (r == 3) != (rank3_recognize(M) is not None):
                raise _Fail(f"rank {r} but the rank-3 recognizer disagrees", M)
            if M.n > 1:
                sub = rng.sample(range(M.n), rng.randrange(1, M.n))
                if _rank_of(charpoly(M.induced(sub))) > r:
                    raise _Fail(f"induced subgraph on {sorted(sub)} has larger rank", M)
            checked += 1
    return checked


_CYCLE_NULLITY = {
    CycleClass.POSITIVE: lambda n: 2 if n % 4 == 0 else 0,
    CycleClass.NEGATIVE: lambda n: 2 if n % 4 == 2 else 0,
    CycleClass.SEMI_POSITIVE: lambda n: 0,
    CycleClass.SEMI_NEGATIVE: lambda n: 0,
}


def _nullity_cycles(spec: SweepSpec) -> int:
    checked = 0
    n_top = max(spec.n_max, 3)
    for n in range(3, n_top + 1):
        G = SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
        if n <= CYCLE_SWEEP_MAX:
            graphs = enumerate_orientations(G)
        else:
            graphs = (cycle_graph(n, kind) for kind in ("", "+", "-", "="))
        seen = set()
        for M in graphs:
            cls = classify_cycle(traversal_weight(M, range(n)))
            seen.add(cls)
            if charpoly(M).zero_multiplicity() != _CYCLE_NULLITY[cls](n):
                raise _Fail(f"nullity of a {cls.value} C_{n} differs from the table", M)
            checked += 1
        if len(seen) != 4:
            raise _Fail(f"C_{n} sweep missed a cycle class")
    return checked


def catalog_family_instances(order_max: int) -> list[tuple[str, MixedGraph]]:
    """Every rho < 2 catalog entry of order <= order_max, families instantiated."""
    out = []
    for n in range(1, order_max + 1):
        out.extend(catalog_members(4, n))
    return out


def catalog_reverse_counterexamples(alpha2: int, n_max: int) -> tuple[list[MixedGraph], int]:
    """Connected graphs of order <= n_max below sqrt(alpha2) that match no catalog member."""
    found = census(n_max, below(alpha2), degree_prefilter(alpha2))
    missing = [M for M in found.representatives if catalog_tag(M, alpha2) is None]
    return missing, len(found.representatives)


def catalog_forward_counterexamples(alpha2: int, n_max: int, family_order_max: int = FAMILY_ORDER_MAX) -> tuple[list, int]:
    """Members of catalog classes that are not below sqrt(alpha2).

    Every orientation of a member's underlying graph that is switching
    equivalent to it is checked up to order n_max; for alpha2 = 4 the
    catalog entries themselves are checked up to family_order_max.
    """
    bad, checked = [], 0
    for n in range(1, n_max + 1):
        for tag, C in catalog_members(alpha2, n):
            target = switching_key(C)
            for M in enumerate_orientations(C.underlying()):
                if switching_key(M) == target:
                    if not radius_strictly_below(M, alpha2):
                        bad.append((tag, M))
                    checked += 1
    if alpha2 == 4:
        for tag, C in catalog_family_instances(family_order_max):
            if not radius_strictly_below(C, 4):
                bad.append((tag, C))
            checked += 1
    return bad, checked


def _radius_catalogs(spec: SweepSpec) -> int:
    alpha2 = spec.alpha2
    bad, checked = catalog_forward_counterexamples(alpha2, spec.n_max)
    if bad:
        tag, M = bad[0]
        raise _Fail(f"member of the class of {tag} is not below sqrt({alpha2})", M)
    missing, count = catalog_reverse_counterexamples(alpha2, spec.n_max)
    if missing:
        raise _Fail(f"below sqrt({alpha2}) but matches no catalog member ({len(missing)} classes)", missing[0])
    return checked + count


def _cospectral_families(spec: SweepSpec) -> int:
    checked = 0
    for t, s in ((1, 1), (2, 1), (1, 2)):
        n = max(4 * t + 9 * s, 6 * t + 6 * s)
        A = complete_bipartite(4 * t, 9 * s, isolated=n - 4 * t - 9 * s)
        B = complete_bipartite(6 * t, 6 * s, isolated=n - 6 * t - 6 * s)
        if charpoly(A) != charpoly(B) or switching_isomorphic(A, B) is not None:
            raise _Fail(f"K_{{{4 * t},{9 * s}}} and K_{{{6 * t},{6 * s}}} plus isolated vertices", A)
        checked += 1
    K = complete_multipartite((8, 15, 1))
    S = complete_multipartite((3, 5, 16), {(0, 1): 1})
    if charpoly(K) != charpoly(S) or switching_isomorphic(K, S) is not None:
        raise _Fail("K_{8,15,1} and the semi-positive K_{3,5,16} are not a cospectral pair", S)
    checked += 1
    # connected rank-2 graphs are determined by their spectrum
    reps = [M for M in census(spec.n_max, rank_at_most(2)).representatives if _rank_of(charpoly(M)) == 2]
    by_poly: dict[tuple, MixedGraph] = {}
    for M in reps:
        key = charpoly(M).coeffs
        if key in by_poly:
            raise _Fail("two cospectral connected rank-2 graphs are not switching isomorphic", M)
        by_poly[key] = M
        checked += 1
    return checked


_RUNNERS: dict[str, Callable[[SweepSpec], int]] = {
    "charpoly-dual": _charpoly_dual,
    "recurrences": _recurrences,
    "switching-invariance": _switching_invariance,
    "interlacing": _interlacing,
    "delta-bound": _delta_bound,
    "rank-table": _rank_table,
    "nullity-cycles": _nullity_cycles,
    "radius-catalogs": _radius_catalogs,
    "cospectral-families": _cospectral_families,
}


def verify_suite(name: str, spec: SweepSpec) -> SuiteReport:
    """Run one suite; a violated invariant yields a failing report, not an exception."""
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    try:
        checked = runner(spec)
    except _Fail as f:
        return SuiteReport(name, False, 0, f.detail, f.graph)
    return SuiteReport(name, True, checked)
