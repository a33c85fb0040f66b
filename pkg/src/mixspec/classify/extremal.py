"""The bound rho <= Delta and the six-part partitions of the graphs attaining it."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from ..core import MixedGraph
from ..nmatrix import CharPoly, charpoly, radius_at_most, radius_equals


class ExtremalMode(enum.Enum):
    POSITIVE = "i"
    NEGATIVE = "ii"


# x_u = w^l(u) is an eigenvector for +Delta (resp. -Delta) iff every edge satisfies
# g(u, v) + l(v) = l(u) + shift with shift 0 (resp. 3)
_SHIFT = {ExtremalMode.POSITIVE: 0, ExtremalMode.NEGATIVE: 3}


@dataclass(frozen=True)
class ExtremalPartition:
    labels: tuple
    mode: ExtremalMode

    def parts(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {j: [] for j in range(6)}
        for v, j in enumerate(self.labels):
            out[j].append(v)
        return out

    def verify(self, M: MixedGraph) -> bool:
        """Edge-by-edge check of item (i) or (ii)."""
        lab = self.labels
        for u, v, g in M.edges:
            tail, head = (u, v) if g != 5 else (v, u)
            d = (lab[head] - lab[tail]) % 6
            if self.mode is ExtremalMode.POSITIVE:
                ok = d == 0 if g == 0 else d == 5
            else:
                ok = d == 3 if g == 0 else d == 2
            if not ok:
                return False
        return True

    def render(self) -> str:
        body = " ".join(f"V{j}={{{','.join(map(str, vs))}}}" for j, vs in self.parts().items() if vs)
        return f"extremal: mode={self.mode.value} parts={body}"


def propagate_partition(M: MixedGraph, mode: ExtremalMode) -> ExtremalPartition | None:
    """Labels forced from l(0) = 0 along BFS; None when some edge contradicts them."""
    if M.n == 0:
        return None
    shift = _SHIFT[mode]
    adj = M.adjacency()
    lab: list[int | None] = [None] * M.n
    for root in range(M.n):
        if lab[root] is not None:
            continue
        lab[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, g in adj[x].items():
                want = (lab[x] + shift - g) % 6
                if lab[y] is None:
                    lab[y] = want
                    queue.append(y)
                elif lab[y] != want:
                    return None
    return ExtremalPartition(tuple(lab), mode)


def extremal_partition(M: MixedGraph) -> ExtremalPartition | None:
    """A partition as in item (i) or (ii) for a connected regular M, if one exists."""
    if not M.is_connected():
        return None
    degs = M.underlying().degrees()
    if len(set(degs)) != 1:
        return None
    for mode in (ExtremalMode.POSITIVE, ExtremalMode.NEGATIVE):
        P = propagate_partition(M, mode)
        if P is not None:
            assert P.verify(M)
            return P
    return None


@dataclass(frozen=True)
class DeltaBoundReport:
    bound_holds: bool
    attains: bool
    extremal: ExtremalPartition | None


def delta_bound_report(M: MixedGraph, P: CharPoly | None = None) -> DeltaBoundReport:
    """Exact check of rho <= Delta, whether equality holds, and the extremal partition."""
    if P is None:
        P = charpoly(M)
    delta = M.underlying().max_degree()
    holds = radius_at_most(P, delta)
    attains = M.n > 0 and radius_equals(P, delta)
    extremal = extremal_partition(M) if M.is_connected() else None
    return DeltaBoundReport(holds, attains, extremal)
