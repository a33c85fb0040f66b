"""Named graphs: the sporadic members of the rho < 2 catalog and reference graphs.

The sporadic graphs are known only through their descriptions and quoted
spectral radii.  Each entry below is the unique switching class (up to
isomorphism and converse) on its underlying graph whose radius matches the
quoted value; ``scripts/reconstruct_catalog.py`` reproduces the search.
Domino vertices are a0 a1 a2 / b0 b1 b2 = 0 1 2 / 3 4 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core import MixedGraph, parse_graph
from .families import box_graph, cycle_graph, path_graph, y_tree


@dataclass(frozen=True)
class NamedGraph:
    name: str
    text: str
    quoted_radius: float
    description: str
    in_catalog: bool = True

    @property
    def graph(self) -> MixedGraph:
        return _parse(self.text)


@lru_cache(maxsize=None)
def _parse(text: str) -> MixedGraph:
    return parse_graph(text.replace("; ", "\n"))


_ENTRIES = [
    # catalog members with rho < 2
    NamedGraph("Q1-", "5 5; 0 1 U; 3 0 F; 0 4 U; 1 2 U; 2 3 F", 1.902, "semi-negative quadrangle plus a pendant vertex"),
    NamedGraph("Q5-", "6 7; 0 1 U; 3 0 F; 1 2 U; 1 4 F; 5 2 F; 3 4 U; 4 5 F", 1.950,
               "domino: semi-negative and negative quadrangle sharing an edge"),
    NamedGraph("Q7-", "6 6; 0 1 U; 3 0 F; 0 4 U; 1 2 U; 2 3 F; 4 5 U", 1.970,
               "semi-negative quadrangle with a pendant path of length 2"),
    NamedGraph("Q15-", "5 6; 0 2 U; 0 3 F; 4 0 F; 1 2 U; 3 1 F; 1 4 F", 3**0.5,
               "K_{2,3} with all three quadrangles semi-negative"),
    NamedGraph("Q17-", "6 7; 0 2 U; 0 3 F; 4 0 F; 1 2 U; 3 1 F; 1 4 F; 2 5 U", 1.932,
               "Q15- plus a pendant at a degree-2 vertex"),
    NamedGraph("Q1=", "6 7; 0 1 U; 0 3 F; 1 2 U; 4 1 F; 2 5 F; 3 4 F; 5 4 F", 3**0.5,
               "domino with both quadrangles negative"),
    NamedGraph("Q4=", "7 8; 0 1 U; 0 3 F; 0 6 U; 1 2 U; 4 1 F; 2 5 F; 3 4 F; 5 4 F", 1.902,
               "Q1= plus a pendant at a corner"),
    NamedGraph("Q5=", "7 9; 0 1 U; 0 3 F; 6 0 F; 1 2 F; 4 1 F; 2 5 F; 2 6 F; 3 4 F; 4 5 U", 3**0.5,
               "Q1= plus a vertex joined to a0 and a2, all quadrangles negative"),
    NamedGraph("Q6=", "8 10; 0 1 U; 0 3 F; 6 0 F; 1 2 F; 4 1 F; 2 5 F; 2 6 F; 3 4 F; 3 7 U; 4 5 U", 1.932,
               "Q5= plus a pendant at a degree-2 vertex"),
    NamedGraph("Q8=", "8 9; 0 1 U; 0 3 F; 0 6 U; 1 2 U; 4 1 F; 2 5 F; 3 4 F; 5 4 F; 5 7 U", 1.956,
               "Q4= plus a pendant at the corner opposite the first"),
    NamedGraph("Q9=", "8 9; 0 1 U; 0 3 F; 0 6 U; 1 2 U; 4 1 F; 2 5 F; 3 4 F; 5 4 F; 6 7 U", 1.970,
               "Q1= with a pendant path of length 2 at a corner"),
    NamedGraph("Q10=", "8 10; 0 1 U; 0 4 F; 1 2 U; 5 1 F; 2 3 U; 2 6 F; 7 3 F; 4 5 F; 6 5 F; 6 7 F", 1.902,
               "ladder of three negative quadrangles"),
    NamedGraph("Q11=", "8 9; 0 1 U; 5 0 F; 0 6 F; 1 2 U; 7 1 F; 2 3 U; 3 4 F; 4 5 F; 6 7 F", 1.956,
               "negative quadrangle and negative hexagon sharing an edge"),
    NamedGraph("H1", "7 7; 0 1 U; 5 0 F; 0 6 U; 1 2 U; 2 3 U; 3 4 F; 4 5 F", 1.932, "negative hexagon plus a pendant"),
    NamedGraph("H2", "8 8; 0 1 U; 5 0 F; 0 6 U; 1 2 U; 2 3 U; 3 4 F; 3 7 U; 4 5 F", 1.932,
               "negative hexagon plus pendants at two vertices at distance 3"),
    # reference graphs with rho >= 2
    NamedGraph("Q7", "4 6; 0 1 U; 0 2 U; 0 3 U; 1 2 F; 1 3 F; 2 3 F", 2.732, "K4 with four semi-positive triangles"),
    NamedGraph("Q8", "4 6; 0 1 U; 0 2 U; 0 3 F; 1 2 F; 3 1 F; 2 3 U", 2.376,
               "K4 with two semi-positive and two semi-negative triangles"),
    NamedGraph("Q9", "4 6; 0 1 U; 0 2 F; 3 0 F; 2 1 F; 1 3 F; 2 3 U", 2.732, "K4 with four semi-negative triangles"),
    NamedGraph("Z1", "4 4; 0 1 U; 0 2 F; 0 3 U; 1 2 U", 2.0615, "semi-positive triangle plus a pendant"),
    NamedGraph("Z2", "4 4; 0 1 U; 2 0 F; 0 3 U; 1 2 F", 2.0615, "semi-negative triangle plus a pendant"),
    # found by the n <= 6 sweep: rho = sqrt(3) < 2, yet no catalog member has 6 vertices and 9 edges
    NamedGraph("K33-", "6 9; 0 1 F; 0 2 F; 3 0 F; 1 4 F; 5 1 F; 4 2 F; 2 5 F; 4 3 F; 5 3 F", 3**0.5,
               "K_{3,3} with all nine quadrangles semi-negative, charpoly (x^2 - 3)^3", in_catalog=False),
]

NAMED = {e.name: e for e in _ENTRIES}
SPORADIC_BELOW_2 = [e.name for e in _ENTRIES if e.in_catalog and e.quoted_radius < 2]

BOX_SPECIAL = [(3, 1, 0, 0), (2, 1, 1, 0), (2, 1, 0, 0), (1, 1, 1, 1), (1, 1, 1, 0), (1, 1, 0, 0)]


def named_graph(name: str) -> MixedGraph:
    try:
        return NAMED[name].graph
    except KeyError:
        raise KeyError(f"unknown named graph {name!r}") from None


def _box_tag(p) -> str:
    return "Box_{" + ",".join(map(str, p)) + "}"


@lru_cache(maxsize=None)
def catalog_members(alpha2: int, n: int) -> tuple:
    """(tag, graph) for the connected catalog members of order n below sqrt(alpha2)."""
    if alpha2 not in (2, 3, 4):
        raise ValueError(f"alpha2 must be 2, 3 or 4, got {alpha2}")
    out: list[tuple[str, MixedGraph]] = []
    if alpha2 == 2:
        if n <= 2:
            out.append((f"P{n}", path_graph(n)))
        return tuple(out)
    if alpha2 == 3:
        if 1 <= n <= 4:
            out.append((f"P{n}", path_graph(n)))
        if n == 4:
            out.append(("C4=", cycle_graph(4, "=")))
        return tuple(out)
    if n >= 3:
        out.append((f"C{n}+", cycle_graph(n, "+")))
        out.append((f"C{n}-", cycle_graph(n, "-")))
        if n % 2 == 0:
            out.append((f"C{n}=", cycle_graph(n, "=")))
    if n >= 1:
        out.append((f"P{n}", path_graph(n)))
    if n >= 4:
        out.append((f"Y_{{{n - 3},1,1}}", y_tree(n - 3, 1, 1)))
    if 2 <= n - 4 <= 4:
        out.append((f"Y_{{{n - 4},2,1}}", y_tree(n - 4, 2, 1)))
    for c in range(0, (n - 4) // 2 + 1):
        a = n - 4 - c
        out.append((_box_tag((a, 0, c, 0)), box_graph(a, 0, c, 0)))
    for p in BOX_SPECIAL:
        if sum(p) + 4 == n:
            out.append((_box_tag(p), box_graph(*p)))
    for name in SPORADIC_BELOW_2:
        if NAMED[name].graph.n == n:
            out.append((name, NAMED[name].graph))
    return tuple(out)


def catalog_up_to(alpha2: int, n_max: int) -> list[tuple[str, MixedGraph]]:
    return [item for n in range(1, n_max + 1) for item in catalog_members(alpha2, n)]
