"""Underlying graphs and exhaustive orientation sweeps."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from ..core import MIXED_GAINS, MixedGraph, SimpleGraph
from ..switching import switching_key

MAX_SWEEP_EDGES = 20
ATLAS_MAX_ORDER = 7
MAX_SWEEP_ORDER = 12

DEDUPE_MODES = ("none", "switching", "isomorphism+switching")


@dataclass(frozen=True)
class SweepSpec:
    """What a sweep covers.

    ``alpha2`` picks the threshold for the radius suites and ``workers`` the
    number of processes; neither changes the report, only how it is produced.
    """

    n_max: int = 5
    underlying_source: str = "all"  # "all" or "files"
    dedupe: str = "none"
    files: tuple = ()
    alpha2: int = 4
    workers: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.underlying_source not in ("all", "files"):
            raise ValueError(f"unknown underlying source {self.underlying_source!r}")
        if self.dedupe not in DEDUPE_MODES:
            raise ValueError(f"unknown dedupe mode {self.dedupe!r}")
        # orientation sweeps over all underlying graphs stop at the atlas order;
        # the cycle suite goes further
        if not 0 <= self.n_max <= MAX_SWEEP_ORDER:
            raise ValueError(f"n_max must lie in 0..{MAX_SWEEP_ORDER}, got {self.n_max}")


def _bfs_relabel(G: SimpleGraph) -> SimpleGraph:
    """Relabel so every prefix 0..k of the vertices induces a connected graph."""
    adj = G.adjacency()
    start = max(range(G.n), key=lambda v: (len(adj[v]), -v)) if G.n else 0
    order: list[int] = []
    seen = set()
    for root in [start] + list(range(G.n)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(adj[x], key=lambda y: (-len(adj[y]), y)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    pos = {v: i for i, v in enumerate(order)}
    return SimpleGraph.from_edges(G.n, ((pos[u], pos[v]) for u, v in G.edges))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple:
    """All connected simple graphs on n vertices up to isomorphism, BFS-labelled."""
    if not 0 <= n <= ATLAS_MAX_ORDER:
        raise ValueError(f"the graph atlas covers 0 <= n <= {ATLAS_MAX_ORDER}")
    if n == 0:
        return ()
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for H in graph_atlas_g():
        if H.number_of_nodes() == n and nx.is_connected(H):
            out.append(_bfs_relabel(SimpleGraph.from_edges(n, H.edges())))
    return tuple(out)


def connected_up_to(n_max: int) -> list[SimpleGraph]:
    return [G for n in range(1, n_max + 1) for G in connected_graphs(n)]


def orientation_count(G: SimpleGraph) -> int:
    return 3 ** G.m


def orientation(G: SimpleGraph, index: int) -> MixedGraph:
    """The index-th gain assignment; the first sorted edge is the most significant digit."""
    edges = G.sorted_edges()
    digits = []
    for _ in edges:
        index, d = divmod(index, 3)
        digits.append(d)
    digits.reverse()
    return MixedGraph(G.n, tuple((u, v, MIXED_GAINS[d]) for (u, v), d in zip(edges, digits)))


def orientation_index(M: MixedGraph) -> int:
    idx = 0
    for _, _, g in M.edges:
        idx = idx * 3 + MIXED_GAINS.index(g)
    return idx


def enumerate_orientations(G: SimpleGraph, dedupe: str = "none") -> Iterator[MixedGraph]:
    """All 3^m mixed graphs on G in lexicographic gain order (0 < 1 < 5 per edge).

    With ``dedupe="switching"`` only the first member of each switching
    class (converse included) is yielded.
    """
    if G.m > MAX_SWEEP_EDGES:
        raise ValueError(f"orientation sweeps are capped at {MAX_SWEEP_EDGES} edges, got {G.m}")
    if dedupe not in ("none", "switching"):
        raise ValueError(f"enumerate_orientations supports dedupe none or switching, got {dedupe!r}")
    import itertools

    edges = G.sorted_edges()
    seen: set = set()
    for gains in itertools.product(MIXED_GAINS, repeat=len(edges)):
        M = MixedGraph(G.n, tuple((u, v, g) for (u, v), g in zip(edges, gains)))
        if dedupe == "switching":
            key = switching_key(M)
            if key in seen:
                continue
            seen.add(key)
        yield M
