"""Cycles of the underlying graph and their weights in the sixth roots of unity."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import MixedGraph, SimpleGraph, T6Element


class CycleClass(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    SEMI_POSITIVE = "SemiPositive"
    SEMI_NEGATIVE = "SemiNegative"

    def __str__(self) -> str:
        return self.value


_CLASS_OF_EXPONENT = {
    0: CycleClass.POSITIVE,
    3: CycleClass.NEGATIVE,
    1: CycleClass.SEMI_POSITIVE,
    5: CycleClass.SEMI_POSITIVE,
    2: CycleClass.SEMI_NEGATIVE,
    4: CycleClass.SEMI_NEGATIVE,
}

# real part of any weight in the class
REAL_PART = {
    CycleClass.POSITIVE: Fraction(1),
    CycleClass.NEGATIVE: Fraction(-1),
    CycleClass.SEMI_POSITIVE: Fraction(1, 2),
    CycleClass.SEMI_NEGATIVE: Fraction(-1, 2),
}

# representative weight exponent per class
CLASS_EXPONENT = {
    CycleClass.POSITIVE: 0,
    CycleClass.SEMI_POSITIVE: 1,
    CycleClass.SEMI_NEGATIVE: 2,
    CycleClass.NEGATIVE: 3,
}


@dataclass(frozen=True)
class CycleDescriptor:
    """A cycle as a vertex sequence in canonical rotation and direction."""

    vertices: tuple

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 3:
            raise ValueError("a cycle needs at least three vertices")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        object.__setattr__(self, "vertices", canonical_rotation(vs))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


def canonical_rotation(vs) -> tuple:
    """Smallest vertex first, then the direction with the smaller second vertex."""
    vs = tuple(vs)
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd if fwd[1] < back[1] else back


def enumerate_cycles(G: SimpleGraph, max_len: int | None = None) -> list[CycleDescriptor]:
    """All cycles of length 3..max_len, each once, in canonical form."""
    if max_len is None:
        max_len = G.n
    if max_len > G.n:
        raise ValueError(f"max_len {max_len} exceeds n = {G.n}")
    return [CycleDescriptor(c) for c in _cycle_tuples(G.n, G.edges, max_len)]


@lru_cache(maxsize=4096)
def _cycle_tuples(n: int, edges: frozenset, max_len: int) -> tuple:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    found = []
    # anchor each cycle at its smallest vertex s; explore only vertices > s
    for s in range(n):
        path = [s]
        on_path = [False] * n
        on_path[s] = True

        def extend(x):
            for y in adj[x]:
                if y <= s:
                    if y == s and len(path) >= 3 and path[1] < x:
                        found.append(tuple(path))
                    continue
                if on_path[y] or len(path) >= max_len:
                    continue
                on_path[y] = True
                path.append(y)
                extend(y)
                path.pop()
                on_path[y] = False

        extend(s)
    found.sort(key=lambda c: (len(c), c))
    return tuple(found)


def cycle_weight(M: MixedGraph, c: CycleDescriptor) -> T6Element:
    """Product of N-matrix entries along the canonical direction of c."""
    total = 0
    for u, v in c.edges():
        g = M.gain(u, v)
        if g is None:
            raise ValueError(f"({u}, {v}) is not an edge, so {c} is not a cycle of the graph")
        total += g
    return T6Element(total)


def traversal_weight(M: MixedGraph, vertices) -> T6Element:
    """Weight of the closed walk through ``vertices`` in the given order."""
    vs = list(vertices)
    total = 0
    for i, u in enumerate(vs):
        g = M.gain(u, vs[(i + 1) % len(vs)])
        if g is None:
            raise ValueError(f"{vs} is not a cycle of the graph")
        total += g
    return T6Element(total)


def classify_cycle(w: T6Element) -> CycleClass:
    return _CLASS_OF_EXPONENT[w.exponent]


def is_chordless(G: SimpleGraph, c: CycleDescriptor) -> bool:
    vs = c.vertices
    k = len(vs)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if G.has_edge(vs[i], vs[j]):
                return False
    return True


def cycle_report(M: MixedGraph, max_len: int | None = None) -> list[str]:
    lines = []
    for c in enumerate_cycles(M.underlying(), max_len):
        w = cycle_weight(M, c)
        lines.append(f"cycle: {c} class={classify_cycle(w)} weight=w^{w.exponent}")
    return lines


def cospectral_by_real_weights(M1: MixedGraph, M2: MixedGraph) -> tuple[bool, str]:
    """Sufficient cospectrality test: every cycle has equal real weight in both.

    Returns ``(verdict, reason)``; the reason is ``"ok"``, ``"underlying-mismatch"``
    or names the first cycle whose real parts differ.  When the verdict is true
    the two exact characteristic polynomials are compared as a guard.
    """
    G = M1.underlying()
    if G != M2.underlying():
        return False, "underlying-mismatch"
    for c in enumerate_cycles(G):
        r1 = REAL_PART[classify_cycle(cycle_weight(M1, c))]
        r2 = REAL_PART[classify_cycle(cycle_weight(M2, c))]
        if r1 != r2:
            return False, f"cycle {c}: real parts {r1} vs {r2}"
    from .nmatrix import charpoly

    if charpoly(M1) != charpoly(M2):
        raise AssertionError("equal real cycle weights but different characteristic polynomials")
    return True, "ok"
