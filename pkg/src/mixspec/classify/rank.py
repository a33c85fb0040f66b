"""Exact rank and nullity, and structural recognizers for ranks 2 and 3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..core import EisensteinNumber, MixedGraph
from ..cycles import CycleClass, _cycle_tuples, classify_cycle, traversal_weight
from ..nmatrix import build_nmatrix, charpoly
from ..switching import SwitchingVerdict, switching_equivalent, twin_reduction


@dataclass(frozen=True)
class RankResult:
    rank: int
    nullity: int


def _zmul(x: tuple, y: tuple) -> tuple:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c + b * d)


def _zdiv(x: tuple, y: tuple) -> tuple:
    """x / y in Z[w], which must be exact."""
    c, d = y
    num = _zmul(x, (c + d, -d))
    norm = c * c + c * d + d * d
    qa, ra = divmod(num[0], norm)
    qb, rb = divmod(num[1], norm)
    if ra or rb:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return (qa, qb)


def elimination_rank(rows: list[list[EisensteinNumber]]) -> int:
    """Rank over Q(w) by fraction-free (Bareiss) elimination in Z[w].

    Rows are first scaled to integral entries; every division by the
    previous pivot is exact and is checked to be so.
    """
    if not rows:
        return 0
    mat = []
    for row in rows:
        if all(isinstance(x.a, int) and isinstance(x.b, int) for x in row):
            mat.append([(x.a, x.b) for x in row])
            continue
        den = 1
        for x in row:
            for part in (Fraction(x.a), Fraction(x.b)):
                den = den * part.denominator // gcd(den, part.denominator)
        mat.append([(int(Fraction(x.a) * den), int(Fraction(x.b) * den)) for x in row])
    nrows, ncols = len(mat), len(mat[0])
    prev = (1, 0)
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if mat[i][col] != (0, 0)), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, nrows):
            f = mat[i][col]
            row = mat[i]
            for j in range(col + 1, ncols):
                t = _zmul(p, row[j])
                u = _zmul(f, mat[rank][j])
                row[j] = _zdiv((t[0] - u[0], t[1] - u[1]), prev)
            row[col] = (0, 0)
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_exact(M: MixedGraph) -> RankResult:
    N = build_nmatrix(M)
    r = elimination_rank([list(row) for row in N.entries])
    if r != M.n - charpoly(M).zero_multiplicity():
        raise AssertionError(f"elimination rank {r} disagrees with the characteristic polynomial")
    return RankResult(r, M.n - r)


def matching_number(M: MixedGraph) -> int:
    import networkx as nx

    return len(nx.max_weight_matching(M.underlying().to_networkx(), maxcardinality=True))


def pendant_reduction_check(M: MixedGraph, u: int, v: int) -> bool:
    """eta(M) = eta(M - u - v) for a pendant edge uv."""
    if M.gain(u, v) is None:
        raise ValueError(f"({u}, {v}) is not an edge")
    if M.degree(u) != 1 and M.degree(v) != 1:
        raise ValueError(f"({u}, {v}) is not a pendant edge")
    return rank_exact(M).nullity == rank_exact(M.delete_vertices([u, v])).nullity


def _complete_bipartite_sides(M: MixedGraph, comp: list[int]) -> tuple[list[int], list[int]] | None:
    adj = M.adjacency()
    a = comp[0]
    side_b = sorted(adj[a])
    side_a = [x for x in comp if x not in adj[a]]
    sa, sb = set(side_a), set(side_b)
    for x in side_a:
        if set(adj[x]) != sb:
            return None
    for y in side_b:
        if set(adj[y]) != sa:
            return None
    return side_a, side_b


@dataclass(frozen=True)
class Rank2Match:
    a: int
    b: int
    t: int
    witness: SwitchingVerdict


def rank2_recognize(M: MixedGraph) -> Rank2Match | None:
    """K_{a,b} plus t isolated vertices, switching equivalent to its underlying graph."""
    comps = M.components()
    big = [c for c in comps if len(c) > 1]
    if len(big) != 1:
        return None
    sides = _complete_bipartite_sides(M, big[0])
    if sides is None:
        return None
    verdict = switching_equivalent(M, MixedGraph.undirected(M.underlying()))
    if not verdict:
        return None
    a, b = sorted((len(sides[0]), len(sides[1])))
    return Rank2Match(a, b, len(comps) - 1, verdict)


def _k4_quadrangle_classes(T: MixedGraph) -> list[CycleClass]:
    return [classify_cycle(traversal_weight(T, c)) for c in _cycle_tuples(4, T.underlying().edges, 4) if len(c) == 4]


def rank3_recognize(M: MixedGraph) -> str | None:
    """Tag ``triangle`` or ``K4-ef`` when the twin reduction has the rank-3 shape."""
    if not M.is_connected():
        raise ValueError("rank3_recognize needs a connected mixed graph")
    T = twin_reduction(M, check_rank=False).reduced
    if T.n == 3 and T.m == 3:
        return "triangle"
    if T.n == 4 and T.m == 6:
        classes = sorted(_k4_quadrangle_classes(T), key=lambda c: c.value)
        if classes == sorted([CycleClass.POSITIVE] * 2 + [CycleClass.SEMI_NEGATIVE], key=lambda c: c.value):
            return "K4-ef"
    return None
