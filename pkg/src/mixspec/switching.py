"""Switching of mixed graphs by diagonal unitary similarity with entries in T6.

A switching function theta assigns an exponent to every vertex and acts on
gains by g'(u, v) = g(u, v) - theta(u) + theta(v) (mod 6), i.e. the matrix
becomes D^{-1} N D with D = diag(w**theta).  The result is a mixed graph only
when every new gain lies in {0, 1, 5}.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import MIXED_GAINS, MixedGraph, T6Element, converse


class SwitchingError(ValueError):
    """The switched gains are not all 1, w or conj(w); carries the first bad edge."""

    def __init__(self, message: str, edge: tuple | None = None):
        self.edge = edge
        super().__init__(message)


@dataclass(frozen=True)
class SwitchingFunction:
    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(int(t) % 6 for t in self.theta))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> SwitchingFunction:
        return cls((value,) * n)

    def __getitem__(self, v: int) -> T6Element:
        return T6Element(self.theta[v])

    def __len__(self) -> int:
        return len(self.theta)


@dataclass(frozen=True)
class AdmissiblePartition:
    """Vertex labels in T6 (as exponents); part V_j is the set of vertices labelled j."""

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(t) % 6 for t in self.labels))

    @classmethod
    def from_parts(cls, n: int, parts: Mapping[int, Iterable[int]]) -> AdmissiblePartition:
        labels: list[int | None] = [None] * n
        for j, vs in parts.items():
            for v in vs:
                if labels[v] is not None:
                    raise ValueError(f"vertex {v} lies in two parts")
                labels[v] = j
        missing = [v for v, j in enumerate(labels) if j is None]
        if missing:
            raise ValueError(f"vertices {missing} are in no part")
        return cls(tuple(labels))

    def parts(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {j: [] for j in range(6)}
        for v, j in enumerate(self.labels):
            out[j].append(v)
        return out


def _switched_gain(g: int, tu: int, tv: int) -> int:
    return (g - tu + tv) % 6


def apply_switching(M: MixedGraph, theta: SwitchingFunction | Sequence[int]) -> MixedGraph:
    """D^{-1} N(M) D for D = diag(w**theta); fails unless the result is a mixed graph."""
    if not isinstance(theta, SwitchingFunction):
        theta = SwitchingFunction(tuple(theta))
    if len(theta) != M.n:
        raise ValueError(f"switching function has {len(theta)} entries for {M.n} vertices")
    t = theta.theta
    edges = []
    for u, v, g in M.edges:
        h = _switched_gain(g, t[u], t[v])
        if h not in MIXED_GAINS:
            raise SwitchingError(f"edge ({u}, {v}) would carry w^{h}", (u, v))
        edges.append((u, v, h))
    return MixedGraph(M.n, tuple(edges))


def two_way_switch(M: MixedGraph, W: Iterable[int]) -> MixedGraph:
    """Arcs W->U become undirected and undirected edges between U and W become arcs U->W."""
    W = set(W)
    if not W or not W <= set(range(M.n)):
        raise ValueError("W must be a non-empty set of vertices")
    for tail, head in M.arcs():
        if tail not in W and head in W:
            raise SwitchingError(f"arc {tail}->{head} runs from U into W", (tail, head))
    return apply_switching(M, [0 if v in W else 5 for v in range(M.n)])


def three_way_switch(M: MixedGraph, P: AdmissiblePartition) -> MixedGraph:
    if len(P.labels) != M.n:
        raise ValueError("partition does not cover the vertex set")
    lab = P.labels
    for u, v, g in M.edges:
        d = (lab[v] - lab[u]) % 6
        if g == 0 and d not in (0, 1, 5):
            raise SwitchingError(f"undirected edge ({u}, {v}) has type (w^{lab[u]}, w^{lab[v]})", (u, v))
        # an arc tail->head must go to the same part, the conj(w) part or the -w part
        if g in (1, 5):
            tail, head = (u, v) if g == 1 else (v, u)
            if (lab[head] - lab[tail]) % 6 not in (0, 5, 4):
                raise SwitchingError(
                    f"arc {tail}->{head} has type (w^{lab[tail]}, w^{lab[head]})", (tail, head)
                )
    return apply_switching(M, lab)


def _bfs_trees(M: MixedGraph) -> tuple[list[int], list[tuple[int, int]], list[int]]:
    """BFS order, tree edges (parent, child) and component roots; roots are lowest vertices."""
    adj = M.adjacency()
    seen = [False] * M.n
    order, tree, roots = [], [], []
    for r in range(M.n):
        if seen[r]:
            continue
        roots.append(r)
        seen[r] = True
        queue = deque([r])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(adj[x]):
                if not seen[y]:
                    seen[y] = True
                    tree.append((x, y))
                    queue.append(y)
    return order, tree, roots


def _forced_theta(M1: MixedGraph, M2: MixedGraph) -> list[int] | None:
    """The unique theta with theta(root) = 0 per component matching M2 on a BFS forest."""
    _, tree, _ = _bfs_trees(M1)
    theta = [0] * M1.n
    for x, y in tree:
        theta[y] = (M2.gain(x, y) - M1.gain(x, y) + theta[x]) % 6
    for u, v, g in M1.edges:
        if _switched_gain(g, theta[u], theta[v]) != M2.gain(u, v):
            return None
    return theta


@dataclass(frozen=True)
class SwitchingVerdict:
    equivalent: bool
    theta: SwitchingFunction | None = None
    used_converse: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equivalent

    def render(self) -> str:
        if not self.equivalent:
            return f"equivalent: no reason={self.reason}"
        body = " ".join(f"v{v}=w^{t}" for v, t in enumerate(self.theta.theta))
        return f"theta: {body} converse={'true' if self.used_converse else 'false'}"


def switching_equivalent(M1: MixedGraph, M2: MixedGraph) -> SwitchingVerdict:
    """Decide whether M2 = theta(M1) or M2 = theta(converse(M1)) for some theta."""
    if M1.underlying() != M2.underlying():
        return SwitchingVerdict(False, reason="underlying mismatch")
    for used, src in ((False, M1), (True, converse(M1))):
        theta = _forced_theta(src, M2)
        if theta is not None:
            return SwitchingVerdict(True, SwitchingFunction(tuple(theta)), used, "ok")
    return SwitchingVerdict(False, reason="cycle weights differ")


def switching_key(M: MixedGraph) -> tuple:
    """Invariant of M under switching and converse on its fixed labelled underlying graph.

    Gains are normalized to 0 on a BFS forest; the remaining gains (the
    weights of the fundamental cycles) determine the class, and converse
    negates them, so the smaller of the two vectors is kept.
    """
    _, tree, _ = _bfs_trees(M)
    theta = [0] * M.n
    for x, y in tree:
        theta[y] = (theta[x] - M.gain(x, y)) % 6
    tree_set = {(min(x, y), max(x, y)) for x, y in tree}
    rest = tuple(_switched_gain(g, theta[u], theta[v]) for u, v, g in M.edges if (u, v) not in tree_set)
    neg = tuple((-x) % 6 for x in rest)
    return (M.n, tuple(e[:2] for e in M.edges), min(rest, neg))


def switching_isomorphic(M1: MixedGraph, M2: MixedGraph) -> tuple | None:
    """Find (perm, verdict) with switching_equivalent(M1.relabel(perm), M2), or None."""
    if M1.n != M2.n or M1.m != M2.m:
        return None
    from networkx.algorithms.isomorphism import GraphMatcher

    target = switching_key(M2)
    matcher = GraphMatcher(M2.underlying().to_networkx(), M1.underlying().to_networkx())
    for mapping in matcher.isomorphisms_iter():
        # mapping sends vertices of M2 to vertices of M1
        perm = [0] * M1.n
        for a, b in mapping.items():
            perm[b] = a
        relabelled = M1.relabel(perm)
        if switching_key(relabelled) == target:
            return perm, switching_equivalent(relabelled, M2)
    return None


def twin_pairs(M: MixedGraph) -> list[tuple[int, int, T6Element]]:
    """Non-adjacent pairs u < v with equal neighbourhoods and rows proportional by s in T6."""
    adj = M.adjacency()
    out = []
    for u in range(M.n):
        for v in range(u + 1, M.n):
            if v in adj[u] or adj[u].keys() != adj[v].keys():
                continue
            diffs = {(adj[u][j] - adj[v][j]) % 6 for j in adj[u]}
            if len(diffs) <= 1:
                out.append((u, v, T6Element(diffs.pop() if diffs else 0)))
    return out


@dataclass(frozen=True)
class TwinReduction:
    representative_map: tuple
    kept: tuple
    reduced: MixedGraph


def twin_reduction(M: MixedGraph, check_rank: bool = True) -> TwinReduction:
    """Repeatedly drop the larger vertex of the lexicographically first twin pair."""
    rep = list(range(M.n))
    kept = list(range(M.n))
    current = M
    while True:
        pairs = twin_pairs(current)
        if not pairs:
            break
        u, v, _ = pairs[0]
        gu, gv = kept[u], kept[v]
        for x in range(M.n):
            if rep[x] == gv:
                rep[x] = gu
        del kept[v]
        current = current.delete_vertices([v])
    if check_rank:
        from .nmatrix import charpoly

        r_full = M.n - charpoly(M).zero_multiplicity()
        r_red = current.n - charpoly(current).zero_multiplicity()
        if r_full != r_red:
            raise AssertionError(f"twin reduction changed the rank: {r_full} -> {r_red}")
    return TwinReduction(tuple(rep), tuple(kept), current)


def underlying_cospectral(M: MixedGraph) -> SwitchingVerdict:
    """Whether a connected M is switching equivalent to its underlying graph."""
    if not M.is_connected():
        raise ValueError("underlying_cospectral needs a connected mixed graph")
    G = MixedGraph.undirected(M.underlying())
    verdict = switching_equivalent(M, G)
    if verdict:
        from .nmatrix import charpoly, eigenvalues

        if charpoly(M) != charpoly(G):
            raise AssertionError("switching equivalent to the underlying graph but not cospectral")
        if abs(eigenvalues(M).eigenvalues[0] - eigenvalues(G).eigenvalues[0]) > 1e-8:
            raise AssertionError("largest eigenvalues differ")
    return verdict
