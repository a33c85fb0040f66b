"""Constructors for paths, T-shape trees, the four kinds of cycle and Box graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..core import MixedGraph


class Family(enum.Enum):
    PATH = "Path"
    YTREE = "YTree"
    CYCLE = "CycleKind"
    BOX = "Box"


# number of consecutive equally directed arcs for each cycle kind
CYCLE_KINDS = {"": 0, "+": 1, "-": 2, "=": 3}


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    parameters: tuple

    def order(self) -> int:
        p = self.parameters
        if self.family is Family.PATH:
            return p[0]
        if self.family is Family.YTREE:
            return sum(p) + 1
        if self.family is Family.CYCLE:
            return p[0]
        return sum(p) + 4


def _attach_path(edges: list, start: int, at: int, length: int) -> int:
    """Hang an undirected path with ``length`` new vertices at vertex ``at``."""
    prev = at
    for k in range(length):
        edges.append((prev, start + k, 0))
        prev = start + k
    return start + length


def path_graph(n: int) -> MixedGraph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return MixedGraph(n, tuple((i, i + 1, 0) for i in range(n - 1)))


def y_tree(a: int, b: int, c: int) -> MixedGraph:
    if min(a, b, c) < 1:
        raise ValueError("Y_{a,b,c} needs a, b, c >= 1")
    edges: list = []
    nxt = 1
    for length in (a, b, c):
        nxt = _attach_path(edges, nxt, 0, length)
    return MixedGraph(nxt, tuple(edges))


def cycle_graph(n: int, kind: str = "") -> MixedGraph:
    """C_n with 0, 1, 2 or 3 consecutive arcs 0->1->2->3 for kind '', '+', '-', '='."""
    if kind not in CYCLE_KINDS:
        raise ValueError(f"unknown cycle kind {kind!r}")
    k = CYCLE_KINDS[kind]
    if n < 3 or k > n:
        raise ValueError(f"cannot build C_{n}{kind}")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((i, j, 1 if i < k else 0))
    return MixedGraph(n, tuple(edges))


def box_graph(a: int, b: int, c: int, d: int) -> MixedGraph:
    """Negative quadrangle v0 v1 v2 v3 with undirected paths of lengths a, b, c, d."""
    if min(a, b, c, d) < 0:
        raise ValueError("Box lengths must be nonnegative")
    edges = list(cycle_graph(4, "=").edges)
    nxt = 4
    for v, length in enumerate((a, b, c, d)):
        nxt = _attach_path(edges, nxt, v, length)
    return MixedGraph(nxt, tuple(edges))


def build_family(p: FamilyParams) -> MixedGraph:
    if p.family is Family.PATH:
        return path_graph(*p.parameters)
    if p.family is Family.YTREE:
        return y_tree(*p.parameters)
    if p.family is Family.CYCLE:
        return cycle_graph(*p.parameters)
    if p.family is Family.BOX:
        return box_graph(*p.parameters)
    raise ValueError(f"unknown family {p.family}")
