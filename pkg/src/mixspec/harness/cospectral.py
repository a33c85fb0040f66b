"""Grouping mixed graphs by exact characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import MixedGraph
from ..nmatrix import CharPoly, charpoly
from ..switching import switching_equivalent, switching_isomorphic


@dataclass(frozen=True)
class CospectralClass:
    poly: CharPoly
    members: tuple  # input indices, increasing
    subclasses: tuple  # partition of members into switching classes

    @property
    def is_witness(self) -> bool:
        """Several switching classes share this spectrum."""
        return len(self.subclasses) > 1


@dataclass(frozen=True)
class CospectralReport:
    classes: tuple
    relation: str

    def witnesses(self) -> list[CospectralClass]:
        return [c for c in self.classes if c.is_witness]

    def render(self) -> str:
        lines = [f"cospectral: classes={len(self.classes)} witnesses={len(self.witnesses())} relation={self.relation}"]
        for k, c in enumerate(self.classes):
            subs = " | ".join(",".join(map(str, s)) for s in c.subclasses)
            lines.append(f"class: {k} {c.poly.machine_line()} members={len(c.members)} subclasses={subs}")
        return "\n".join(lines) + "\n"


def find_cospectral(graphs: list[MixedGraph], relation: str = "labelled") -> CospectralReport:
    """Group by CharPoly, then split each group into switching classes.

    ``relation="labelled"`` uses switching_equivalent on the graphs as given
    (different underlying graphs are never equivalent); ``"isomorphism"``
    also allows a relabelling of the vertices.
    """
    if relation == "labelled":
        same = lambda a, b: bool(switching_equivalent(a, b))  # noqa: E731
    elif relation == "isomorphism":
        same = lambda a, b: switching_isomorphic(a, b) is not None  # noqa: E731
    else:
        raise ValueError(f"unknown relation {relation!r}")
    groups: dict[tuple, list[int]] = {}
    polys: dict[tuple, CharPoly] = {}
    for i, M in enumerate(graphs):
        P = charpoly(M)
        groups.setdefault(P.coeffs, []).append(i)
        polys[P.coeffs] = P
    classes = []
    for coeffs, members in groups.items():
        subs: list[list[int]] = []
        for i in members:
            for s in subs:
                if same(graphs[s[0]], graphs[i]):
                    s.append(i)
                    break
            else:
                subs.append([i])
        classes.append(CospectralClass(polys[coeffs], tuple(members), tuple(tuple(s) for s in subs)))
    return CospectralReport(tuple(classes), relation)


def complete_bipartite(a: int, b: int, isolated: int = 0) -> MixedGraph:
    """Undirected K_{a,b} plus isolated vertices."""
    edges = tuple((i, a + j, 0) for i in range(a) for j in range(b))
    return MixedGraph(a + b + isolated, edges)


def complete_multipartite(parts: tuple, gains: dict | None = None) -> MixedGraph:
    """Complete multipartite graph; ``gains[(i, j)]`` (i < j) sets the gain from part i to part j."""
    gains = gains or {}
    starts = [sum(parts[:k]) for k in range(len(parts))]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            g = gains.get((i, j), 0)
            for x in range(parts[i]):
                for y in range(parts[j]):
                    edges.append((starts[i] + x, starts[j] + y, g))
    return MixedGraph(sum(parts), tuple(edges))
