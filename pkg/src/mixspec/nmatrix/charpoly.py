"""Characteristic polynomials of N-matrices by two independent routes.

``charpoly_exact`` runs the Faddeev-LeVerrier recurrence in exact Z[w]
arithmetic.  ``charpoly_subgraphs`` sums signed contributions of elementary
mixed subgraphs (disjoint unions of edges and cycles), classified by the
weights of their cycles.  The two must agree on every input.
"""

from __future__ import annotations

from functools import lru_cache

from ..core import MixedGraph
from ..cycles import _cycle_tuples
from .matrix import NMatrix
from .poly import CharPoly, poly_add, poly_scale, poly_shift, poly_sub

MAX_SUBGRAPH_ORDER = 12


class CapacityError(ValueError):
    """Input exceeds the size an exponential routine is allowed to handle."""


def _faddeev(n: int, rows: list[list[tuple[int, object, object]]]) -> CharPoly:
    """Faddeev-LeVerrier on a sparse Hermitian matrix given as rows of (col, a, b)."""
    coeffs = [1]
    # M holds A*M_{k-1} + c_{k-1} I, split into the 1- and w-components
    ma = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    mb = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        pa = [[0] * n for _ in range(n)]
        pb = [[0] * n for _ in range(n)]
        for i in range(n):
            ra, rb = pa[i], pb[i]
            for j, a, b in rows[i]:
                xa, xb = ma[j], mb[j]
                for c in range(n):
                    x, y = xa[c], xb[c]
                    if x or y:
                        ra[c] += a * x - b * y
                        rb[c] += a * y + b * x + b * y
        tr_a = sum(pa[i][i] for i in range(n))
        tr_b = sum(pb[i][i] for i in range(n))
        if tr_b != 0:
            raise ArithmeticError(f"trace at step {k} has nonzero w-part {tr_b}")
        q, r = divmod(-tr_a, k)
        if r != 0:
            raise ArithmeticError(f"coefficient c_{k} = {-tr_a}/{k} is not an integer")
        coeffs.append(q)
        for i in range(n):
            pa[i][i] += q
        ma, mb = pa, pb
    return CharPoly(tuple(coeffs))


def charpoly_exact(N: NMatrix) -> CharPoly:
    """det(xI - N) via Faddeev-LeVerrier over Q(w); integrality is checked, not assumed."""
    rows = []
    for i in range(N.n):
        row = []
        for j in range(N.n):
            x = N[i, j]
            if not x.is_zero():
                row.append((j, x.a, x.b))
        rows.append(row)
    return _faddeev(N.n, rows)


def charpoly(M: MixedGraph) -> CharPoly:
    """Exact characteristic polynomial of a mixed graph (determinant route)."""
    rows: list[list] = [[] for _ in range(M.n)]
    embed = {0: (1, 0), 1: (0, 1), 5: (1, -1)}
    for u, v, g in M.edges:
        rows[u].append((v, *embed[g]))
        rows[v].append((u, *embed[(-g) % 6]))
    return _faddeev(M.n, rows)


@lru_cache(maxsize=4096)
def elementary_structure(n: int, edges: frozenset) -> tuple:
    """Elementary subgraphs of an underlying graph, grouped for fast evaluation.

    Returns ``(cycles, base, with_cycles)``: the cycle vertex tuples, the
    per-order sums of (-1)^components over cycle-free elementary subgraphs
    (perfect matchings of k-subsets), and the remaining subgraphs as
    ``(k, components, cycle_ids)``.
    """
    cycles = _cycle_tuples(n, edges, n)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    by_min: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for cid, c in enumerate(cycles):
        mask = 0
        for x in c:
            mask |= 1 << x
        by_min[c[0]].append((cid, mask, len(c)))
    base = [0] * (n + 1)
    with_cycles: list[tuple[int, int, tuple]] = []

    def rec(v, used, k, t, cyc):
        while v < n and used >> v & 1:
            v += 1
        if v == n:
            if cyc:
                with_cycles.append((k, t, cyc))
            else:
                base[k] += -1 if t % 2 else 1
            return
        bit = 1 << v
        rec(v + 1, used | bit, k, t, cyc)
        for u in adj[v]:
            if u > v and not used >> u & 1:
                rec(v + 1, used | bit | (1 << u), k + 2, t + 1, cyc)
        for cid, mask, length in by_min[v]:
            if not used & mask:
                rec(v + 1, used | mask, k + length, t + 1, cyc + (cid,))

    rec(0, 0, 0, 0, ())
    return cycles, tuple(base), tuple(with_cycles)


def charpoly_subgraphs(M: MixedGraph) -> CharPoly:
    """Coefficients as signed sums over elementary mixed subgraphs.

    A k-vertex elementary subgraph with t components and l_p, l_n, l_sn
    positive, negative and semi-negative cycles contributes
    (-1)^(-k + (k - t) + l_sn + l_n) * 2^(l_p + l_n) to c_k.
    """
    if M.n > MAX_SUBGRAPH_ORDER:
        raise CapacityError(f"subgraph expansion is limited to n <= {MAX_SUBGRAPH_ORDER}, got {M.n}")
    G = M.underlying()
    cycles, base, with_cycles = elementary_structure(G.n, G.edges)
    weights = []
    for c in cycles:
        w = 0
        for i, u in enumerate(c):
            w += M.gain(u, c[(i + 1) % len(c)])
        weights.append(w % 6)
    coeffs = list(base)
    for k, t, cyc in with_cycles:
        l_p = l_n = l_sn = 0
        for cid in cyc:
            w = weights[cid]
            if w == 0:
                l_p += 1
            elif w == 3:
                l_n += 1
            elif w in (2, 4):
                l_sn += 1
        sign = -1 if (-k + (k - t) + l_sn + l_n) % 2 else 1
        coeffs[k] += sign * 2 ** (l_p + l_n)
    return CharPoly(tuple(coeffs))


def _cycles_through(M: MixedGraph, predicate) -> list[tuple]:
    G = M.underlying()
    return [c for c in _cycle_tuples(G.n, G.edges, G.n) if predicate(c)]


def _twice_real_weight(M: MixedGraph, c: tuple) -> int:
    w = sum(M.gain(u, c[(i + 1) % len(c)]) for i, u in enumerate(c)) % 6
    return {0: 2, 1: 1, 5: 1, 2: -1, 4: -1, 3: -2}[w]


def vertex_recurrence_residual(M: MixedGraph, u: int) -> CharPoly:
    """P(M) - [x P(M-u) - sum_{v~u} P(M-u-v) - sum_{Z ∋ u} 2Re(wt Z) P(M-V(Z))]."""
    if not 0 <= u < M.n:
        raise IndexError(f"vertex {u} out of range")
    rhs = poly_shift(charpoly(M.delete_vertices([u])).coeffs, 1)
    for v in M.adjacency()[u]:
        rhs = poly_sub(rhs, charpoly(M.delete_vertices([u, v])).coeffs)
    for c in _cycles_through(M, lambda c: u in c):
        term = charpoly(M.delete_vertices(c)).coeffs
        rhs = poly_sub(rhs, poly_scale(term, _twice_real_weight(M, c)))
    return CharPoly(tuple(poly_sub(charpoly(M).coeffs, rhs)))


def _contains_edge(c: tuple, u: int, v: int) -> bool:
    k = len(c)
    for i in range(k):
        a, b = c[i], c[(i + 1) % k]
        if (a, b) == (u, v) or (a, b) == (v, u):
            return True
    return False


def edge_recurrence_residual(M: MixedGraph, u: int, v: int) -> CharPoly:
    """P(M) - [P(M-uv) - P(M-u-v) - sum_{Z ∋ uv} 2Re(wt Z) P(M-V(Z))]."""
    if M.gain(u, v) is None:
        raise ValueError(f"({u}, {v}) is not an edge")
    rhs = poly_sub(charpoly(M.delete_edge(u, v)).coeffs, charpoly(M.delete_vertices([u, v])).coeffs)
    for c in _cycles_through(M, lambda c: _contains_edge(c, u, v)):
        term = charpoly(M.delete_vertices(c)).coeffs
        rhs = poly_sub(rhs, poly_scale(term, _twice_real_weight(M, c)))
    return CharPoly(tuple(poly_sub(charpoly(M).coeffs, rhs)))


def cut_edge_residual(M: MixedGraph, u: int, v: int) -> CharPoly:
    """P(M) - [P(G1) P(G2) - P(G1-u) P(G2-v)] for a cut edge uv with u in G1."""
    H = M.delete_edge(u, v)
    comps = H.components()
    cu = next(c for c in comps if u in c)
    if v in cu:
        raise ValueError(f"({u}, {v}) is not a cut edge")
    rest = [x for x in range(M.n) if x not in cu]
    G1, G2 = H.induced(cu), H.induced(rest)
    G1u = H.induced([x for x in cu if x != u])
    G2v = H.induced([x for x in rest if x != v])
    rhs = poly_sub(
        (charpoly(G1) * charpoly(G2)).coeffs,
        (charpoly(G1u) * charpoly(G2v)).coeffs,
    )
    return CharPoly(tuple(poly_sub(charpoly(M).coeffs, rhs)))


def trace_square_check(M: MixedGraph) -> bool:
    """Sum of squared eigenvalues is 2m, i.e. c_2 = -m (c_1 being 0)."""
    P = charpoly(M)
    if M.n < 2:
        return M.m == 0
    return P.coefficient(1) == 0 and P.coefficient(2) == -M.m
