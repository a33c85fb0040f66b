"""Per-underlying-graph tables of characteristic polynomials and batched switching checks.

Orientations of a labelled graph G are indexed by base-3 numbers whose
digits (most significant first, over the sorted edges) select the gains
0, 1, 5.  A switching sends an orientation to another orientation of G, so
invariance can be checked by index lookups into one table.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..core import MIXED_GAINS, SimpleGraph
from ..nmatrix import CharPoly, charpoly, charpoly_subgraphs
from .orientations import orientation, orientation_count

_GAIN = np.array(MIXED_GAINS, dtype=np.int8)
# gain exponent mod 6 -> digit, or -1 when the gain is not a mixed-graph gain
_DIGIT = np.array([0, 1, -1, -1, -1, 2], dtype=np.int64)


def _block_polys(G: SimpleGraph, start: int, stop: int, route: str) -> list[tuple]:
    fn = charpoly if route == "exact" else charpoly_subgraphs
    return [fn(orientation(G, i)).coeffs for i in range(start, stop)]


def _blocks(total: int, workers: int) -> list[tuple[int, int]]:
    size = max(1, -(-total // max(1, workers * 4)))
    return [(s, min(total, s + size)) for s in range(0, total, size)]


@dataclass
class OrientationTable:
    """Characteristic polynomial id of every orientation of one labelled graph."""

    graph: SimpleGraph
    ids: np.ndarray
    polys: list  # distinct CharPoly, indexed by id

    def poly(self, index: int) -> CharPoly:
        return self.polys[int(self.ids[index])]


def build_table(G: SimpleGraph, route: str = "exact", workers: int = 1) -> OrientationTable:
    """Compute every orientation's polynomial; blocks are merged in index order."""
    if route not in ("exact", "subgraph"):
        raise ValueError(f"unknown route {route!r}")
    total = orientation_count(G)
    if workers > 1 and total > 2000:
        blocks = _blocks(total, workers)
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_block_polys, [G] * len(blocks), *zip(*blocks), [route] * len(blocks))
            coeffs = [c for part in parts for c in part]
    else:
        coeffs = _block_polys(G, 0, total, route)
    index: dict[tuple, int] = {}
    ids = np.empty(total, dtype=np.int64)
    for i, c in enumerate(coeffs):
        ids[i] = index.setdefault(c, len(index))
    polys = [CharPoly(c) for c in index]
    return OrientationTable(G, ids, polys)


def gain_array(G: SimpleGraph) -> np.ndarray:
    """(3^m, m) gains of all orientations, in index order."""
    m = G.m
    digits = np.array(list(itertools.product(range(3), repeat=m)), dtype=np.int64).reshape(3**m, m)
    return _GAIN[digits].astype(np.int64)


def _index_of(digits: np.ndarray) -> np.ndarray:
    m = digits.shape[-1]
    weights = 3 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return digits @ weights


# _SWITCHED[digit, shift] is the digit of gain + shift, or -1
_SWITCHED = _DIGIT[(_GAIN[:, None].astype(np.int64) + np.arange(6)[None, :]) % 6]


def _switched_indices(digits: np.ndarray, shift: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(ok, index) of every orientation in ``digits`` under every shift row, edge by edge."""
    k, m = digits.shape
    ok = np.ones((k, shift.shape[0]), dtype=bool)
    idx = np.zeros((k, shift.shape[0]), dtype=np.int64)
    for e in range(m):
        d = _SWITCHED[digits[:, e][:, None], shift[None, :, e]]
        ok &= d >= 0
        idx = idx * 3 + np.maximum(d, 0)
    return ok, idx


@dataclass(frozen=True)
class SwitchingSweepResult:
    graph: SimpleGraph
    three_way_checked: int
    two_way_checked: int
    converse_checked: int
    violation: tuple | None  # (orientation index, theta, kind)


def switching_sweep(table: OrientationTable, chunk: int = 256) -> SwitchingSweepResult:
    """Check polynomial invariance under every admissible switching and the converse.

    Three-way: every labelling theta with theta(0) = 0 whose switched gains
    g - theta(u) + theta(v) all stay in {0, 1, 5}.  Two-way: every W with the
    labelling 0 on W and 5 elsewhere, applicable unless an arc runs from
    outside W into W; the applicability rule is evaluated from the arcs and
    must agree with the gain test.
    """
    G = table.graph
    n, edges = G.n, G.sorted_edges()
    us = np.array([u for u, _ in edges], dtype=np.int64)
    vs = np.array([v for _, v in edges], dtype=np.int64)
    gains = gain_array(G)
    digits = _DIGIT[gains % 6]
    total = gains.shape[0]
    ids = table.ids
    if n == 1:
        thetas = np.zeros((1, 1), dtype=np.int64)
    else:
        thetas = np.array([(0,) + t for t in itertools.product(range(6), repeat=n - 1)], dtype=np.int64)
    two_way = np.array(list(itertools.product((0, 5), repeat=n)), dtype=np.int64)
    three_checked = two_checked = 0

    shift = (thetas[:, vs] - thetas[:, us]) % 6  # (L, m)
    shift2 = (two_way[:, vs] - two_way[:, us]) % 6
    in_w = two_way == 0  # (S, n)
    for start in range(0, total, chunk):
        g = gains[start:start + chunk]  # (K, m)
        base = ids[start:start + chunk]
        ok, idx = _switched_indices(digits[start:start + chunk], shift)
        k, l = np.nonzero(ok & (ids[idx] != base[:, None]))
        three_checked += int(ok.sum())
        if k.size:
            return SwitchingSweepResult(G, three_checked, two_checked, 0,
                                        (start + int(k[0]), tuple(int(x) for x in thetas[l[0]]), "three-way"))

        new2 = (g[:, None, :] + shift2[None, :, :]) % 6
        digit2 = _DIGIT[new2]
        ok2 = (digit2 >= 0).all(axis=2)
        # arcs as (tail, head): gain 1 is u->v, gain 5 is v->u
        tail = np.where(g == 5, vs, us)
        head = np.where(g == 5, us, vs)
        is_arc = g != 0
        bad = is_arc[:, None, :] & ~in_w[:, tail].transpose(1, 0, 2) & in_w[:, head].transpose(1, 0, 2)
        applicable = ~bad.any(axis=2)
        if not np.array_equal(applicable, ok2):
            k, l = np.nonzero(applicable != ok2)
            return SwitchingSweepResult(G, three_checked, two_checked, 0,
                                        (start + int(k[0]), tuple(int(x) for x in two_way[l[0]]), "two-way rule"))
        idx2 = _index_of(np.where(digit2 >= 0, digit2, 0))
        k, l = np.nonzero(applicable & (ids[idx2] != base[:, None]))
        two_checked += int(applicable.sum())
        if k.size:
            return SwitchingSweepResult(G, three_checked, two_checked, 0,
                                        (start + int(k[0]), tuple(int(x) for x in two_way[l[0]]), "two-way"))

    conv = _index_of(_DIGIT[(-gains) % 6])
    bad = np.nonzero(ids[conv] != ids)[0]
    if bad.size:
        return SwitchingSweepResult(G, three_checked, two_checked, total, (int(bad[0]), (), "converse"))
    return SwitchingSweepResult(G, three_checked, two_checked, total, None)
