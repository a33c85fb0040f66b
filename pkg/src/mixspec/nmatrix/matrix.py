from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import EisensteinNumber, MixedGraph, T6Element

_ZERO = EisensteinNumber(0, 0)
_ONE = EisensteinNumber(1, 0)


@dataclass(frozen=True)
class NMatrix:
    """Hermitian matrix over Q(w), stored row-major as tuples of EisensteinNumber."""

    n: int
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(EisensteinNumber.coerce(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError("entries must be an n x n array")
        object.__setattr__(self, "entries", rows)

    def __getitem__(self, jk) -> EisensteinNumber:
        j, k = jk
        return self.entries[j][k]

    def is_hermitian(self) -> bool:
        return all(
            self.entries[j][k] == self.entries[k][j].conj() for j in range(self.n) for k in range(j, self.n)
        )

    def transpose(self) -> NMatrix:
        return NMatrix(self.n, tuple(zip(*self.entries)))

    def to_complex(self) -> np.ndarray:
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)


def build_nmatrix(M: MixedGraph) -> NMatrix:
    rows = [[_ZERO] * M.n for _ in range(M.n)]
    for u, v, g in M.edges:
        rows[u][v] = T6Element(g).to_eisenstein()
        rows[v][u] = T6Element(-g).to_eisenstein()
    return NMatrix(M.n, tuple(map(tuple, rows)))


def complement_nmatrix(N: NMatrix) -> NMatrix:
    """J - N - I."""
    rows = []
    for j in range(N.n):
        rows.append(tuple((_ZERO if j == k else _ONE) - N[j, k] for k in range(N.n)))
    return NMatrix(N.n, tuple(rows))


def complement_graph(M: MixedGraph) -> MixedGraph:
    """The mixed graph whose N-matrix is J - N(M) - I.

    Non-edges become undirected edges, undirected edges disappear and an arc
    u->v becomes the arc v->u (1 - w = conj(w)).
    """
    edges = []
    for u in range(M.n):
        for v in range(u + 1, M.n):
            g = M.gain(u, v)
            if g is None:
                edges.append((u, v, 0))
            elif g != 0:
                edges.append((u, v, (-g) % 6))
    return MixedGraph(M.n, tuple(edges))


def nmatrix_to_graph(N: NMatrix) -> MixedGraph:
    """Inverse of build_nmatrix; fails unless every entry is 0, 1, w or conj(w)."""
    lookup = {T6Element(g).to_eisenstein(): g for g in (0, 1, 5)}
    edges = []
    for u in range(N.n):
        if not N[u, u].is_zero():
            raise ValueError("nonzero diagonal")
        for v in range(u + 1, N.n):
            x = N[u, v]
            if x.is_zero():
                continue
            if x not in lookup:
                raise ValueError(f"entry ({u}, {v}) = {x} is not 1, w or conj(w)")
            edges.append((u, v, lookup[x]))
    return MixedGraph(N.n, tuple(edges))
