"""Exhaustive search for the orientations satisfying a property closed under induced subgraphs.

Orientations of a labelled connected graph are built vertex by vertex; the
gains between vertex k and earlier vertices are chosen once the induced
subgraph on 0..k-1 passes.  A prefix that fails prunes every extension,
which is sound whenever the property passes to induced subgraphs (rho below
a threshold by interlacing, rank at most r by the rank of a principal
submatrix).  Nothing is deduplicated during the search, so the result is
every labelled orientation with the property.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from ..core import MIXED_GAINS, MixedGraph, SimpleGraph
from ..nmatrix import CharPoly, charpoly, radius_at_most, radius_strictly_below
from ..switching import switching_key
from .orientations import connected_graphs

Predicate = Callable[[MixedGraph, CharPoly], bool]


def hereditary_orientations(G: SimpleGraph, keep: Predicate) -> list[MixedGraph]:
    """All orientations M of G with keep(M[0..k]) true for every prefix k."""
    back = [[u for u in range(k) if G.has_edge(u, k)] for k in range(G.n)]
    partial: list[tuple] = [()]
    for k in range(G.n):
        grown = []
        for edges in partial:
            for gains in itertools.product(MIXED_GAINS, repeat=len(back[k])):
                cand = edges + tuple((u, k, g) for u, g in zip(back[k], gains))
                M = MixedGraph(k + 1, cand)
                if keep(M, charpoly(M)):
                    grown.append(cand)
        partial = grown
        if not partial:
            return []
    return [MixedGraph(G.n, e) for e in partial]


def automorphisms(G: SimpleGraph) -> list[tuple]:
    """Vertex permutations (perm[v] = image of v) preserving G."""
    from networkx.algorithms.isomorphism import GraphMatcher

    H = G.to_networkx()
    out = []
    for mapping in GraphMatcher(H, H).isomorphisms_iter():
        out.append(tuple(mapping[v] for v in range(G.n)))
    return sorted(out)


def class_key(M: MixedGraph, autos: list[tuple]) -> tuple:
    """Invariant of M under switching, converse and automorphisms of its underlying graph."""
    return min(switching_key(M.relabel(p)) for p in autos)


@dataclass
class ClassCensus:
    """Switching-isomorphism classes with a property, one representative each."""

    representatives: list = field(default_factory=list)
    labelled_count: int = 0

    def by_order(self, n: int) -> list[MixedGraph]:
        return [M for M in self.representatives if M.n == n]


def census(n_max: int, keep: Predicate, prefilter: Callable[[SimpleGraph], bool] = lambda G: True) -> ClassCensus:
    """Connected mixed graphs of order <= n_max with the hereditary property, up to switching isomorphism.

    ``prefilter`` may discard underlying graphs that provably admit no
    orientation with the property.
    """
    out = ClassCensus()
    for n in range(1, n_max + 1):
        for G in connected_graphs(n):
            if not prefilter(G):
                continue
            found = hereditary_orientations(G, keep)
            out.labelled_count += len(found)
            if not found:
                continue
            autos = automorphisms(G)
            seen = set()
            for M in found:
                key = class_key(M, autos)
                if key not in seen:
                    seen.add(key)
                    out.representatives.append(M)
    return out


@lru_cache(maxsize=None)
def _below_cached(coeffs: tuple, alpha2: int) -> bool:
    return radius_strictly_below(CharPoly(coeffs), alpha2)


def below(alpha2: int) -> Predicate:
    return lambda M, P: _below_cached(P.coeffs, alpha2)


def rank_at_most(r: int) -> Predicate:
    return lambda M, P: M.n - P.zero_multiplicity() <= r


def radius_at_most_one(M: MixedGraph, P: CharPoly) -> bool:
    return radius_at_most(P, 1)


def degree_prefilter(alpha2: int) -> Callable[[SimpleGraph], bool]:
    """rho^2 >= max degree and rho^2 >= 2m/n, from the diagonal and the trace of N^2."""
    return lambda G: G.max_degree() < alpha2 and 2 * G.m < alpha2 * G.n
