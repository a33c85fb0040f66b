"""Mixed graphs, sixth roots of unity and exact arithmetic in Q(w).

Throughout, ``w`` is the primitive sixth root of unity (1 + i*sqrt(3)) / 2.
A mixed graph stores one gain per edge on its smaller endpoint; the gain is
the (u, v) entry of the N-matrix and is always one of 1, w, conj(w), encoded
as the exponents 0, 1, 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Union

Rational = Union[int, Fraction]

# exponent -> (a, b) with w**e = a + b*w
_EMBED = {0: (1, 0), 1: (0, 1), 2: (-1, 1), 3: (-1, 0), 4: (0, -1), 5: (1, -1)}

MIXED_GAINS = (0, 1, 5)
KIND_OF_GAIN = {0: "U", 1: "F", 5: "B"}
GAIN_OF_KIND = {"U": 0, "F": 1, "B": 5}


class GraphFormatError(ValueError):
    """Raised for malformed mixed-graph text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True, order=True)
class T6Element:
    """The sixth root of unity w**exponent."""

    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 6)

    def __mul__(self, other: T6Element) -> T6Element:
        return T6Element(self.exponent + other.exponent)

    def conj(self) -> T6Element:
        return T6Element(-self.exponent)

    def to_eisenstein(self) -> EisensteinNumber:
        return EisensteinNumber(*_EMBED[self.exponent])

    def __str__(self) -> str:
        return f"w^{self.exponent}"


def t6_mul(x: T6Element, y: T6Element) -> T6Element:
    return x * y


def to_eisenstein(x: T6Element) -> EisensteinNumber:
    return x.to_eisenstein()


@dataclass(frozen=True)
class EisensteinNumber:
    """Exact element a + b*w of Q(w), using w**2 = w - 1."""

    a: Rational = 0
    b: Rational = 0

    @classmethod
    def coerce(cls, value) -> EisensteinNumber:
        if isinstance(value, EisensteinNumber):
            return value
        if isinstance(value, T6Element):
            return value.to_eisenstein()
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot convert {value!r} to EisensteinNumber")

    def __add__(self, other):
        other = EisensteinNumber.coerce(other)
        return EisensteinNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinNumber(-self.a, -self.b)

    def __sub__(self, other):
        other = EisensteinNumber.coerce(other)
        return EisensteinNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return EisensteinNumber.coerce(other) - self

    def __mul__(self, other):
        other = EisensteinNumber.coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinNumber(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> EisensteinNumber:
        return EisensteinNumber(self.a + self.b, -self.b)

    def norm(self) -> Rational:
        """|z|**2 = a**2 + a*b + b**2, always a nonnegative rational."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def inverse(self) -> EisensteinNumber:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return EisensteinNumber(Fraction(c.a) / nrm, Fraction(c.b) / nrm)

    def __truediv__(self, other):
        return self * EisensteinNumber.coerce(other).inverse()

    def is_real(self) -> bool:
        return self.b == 0

    def real_part(self) -> Fraction:
        return Fraction(self.a) + Fraction(self.b) / 2

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = EisensteinNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __complex__(self) -> complex:
        return complex(float(self.a) + float(self.b) / 2, float(self.b) * 3**0.5 / 2)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*w"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*w"


def eis_mul(x: EisensteinNumber, y: EisensteinNumber) -> EisensteinNumber:
    return x * y


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1; edges stored as sorted pairs."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency()]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_bipartite(self) -> bool:
        adj = self.adjacency()
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
        return True

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class MixedGraph:
    """Simple underlying graph plus a gain exponent in {0, 1, 5} per edge.

    ``edges`` holds ``(u, v, g)`` with ``u < v``; ``g`` is the exponent of the
    (u, v) entry of the N-matrix: 0 undirected, 1 arc u->v, 5 arc v->u.
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        gains: dict[tuple[int, int], int] = {}
        for u, v, g in self.edges:
            if isinstance(g, T6Element):
                g = g.exponent
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                u, v, g = v, u, -g
            g %= 6
            if g not in MIXED_GAINS:
                raise ValueError(f"gain w^{g} on ({u}, {v}) is not 1, w or conj(w)")
            if (u, v) in gains:
                raise ValueError(f"duplicate edge ({u}, {v})")
            gains[(u, v)] = g
        object.__setattr__(self, "edges", tuple((u, v, g) for (u, v), g in sorted(gains.items())))
        object.__setattr__(self, "_gains", gains)

    @classmethod
    def from_arcs(cls, n: int, undirected=(), arcs=()) -> MixedGraph:
        """Build from undirected pairs and arcs (tail, head)."""
        edges = [(u, v, 0) for u, v in undirected]
        edges += [(u, v, 1) for u, v in arcs]
        return cls(n, tuple(edges))

    @classmethod
    def undirected(cls, graph: SimpleGraph) -> MixedGraph:
        return cls(graph.n, tuple((u, v, 0) for u, v in graph.sorted_edges()))

    @property
    def m(self) -> int:
        return len(self.edges)

    def gain(self, u: int, v: int) -> int | None:
        """Exponent of the (u, v) entry, or None when u and v are not adjacent."""
        if u < v:
            return self._gains.get((u, v))
        g = self._gains.get((v, u))
        return None if g is None else (-g) % 6

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset((u, v) for u, v, _ in self.edges))

    def adjacency(self) -> list[dict[int, int]]:
        """Per vertex, neighbor -> gain exponent of the entry (vertex, neighbor)."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, g in self.edges:
            adj[u][v] = g
            adj[v][u] = (-g) % 6
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e[:2])

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs as (tail, head)."""
        out = []
        for u, v, g in self.edges:
            if g == 1:
                out.append((u, v))
            elif g == 5:
                out.append((v, u))
        return out

    def induced(self, vertices: Iterable[int]) -> MixedGraph:
        """Induced subgraph, relabelled to 0..k-1 in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = tuple((index[u], index[v], g) for u, v, g in self.edges if u in index and v in index)
        return MixedGraph(len(keep), edges)

    def delete_vertices(self, vertices: Iterable[int]) -> MixedGraph:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def delete_edge(self, u: int, v: int) -> MixedGraph:
        key = (min(u, v), max(u, v))
        if key not in self._gains:
            raise ValueError(f"({u}, {v}) is not an edge")
        return MixedGraph(self.n, tuple(e for e in self.edges if e[:2] != key))

    def relabel(self, perm) -> MixedGraph:
        """Vertex v becomes perm[v]."""
        return MixedGraph(self.n, tuple((perm[u], perm[v], g) for u, v, g in self.edges))

    def disjoint_union(self, other: MixedGraph) -> MixedGraph:
        k = self.n
        return MixedGraph(k + other.n, self.edges + tuple((u + k, v + k, g) for u, v, g in other.edges))

    def components(self) -> list[list[int]]:
        return self.underlying().components()

    def is_connected(self) -> bool:
        return self.underlying().is_connected()

    def __str__(self) -> str:
        return serialize_graph(self).strip().replace("\n", "; ")


def converse(M: MixedGraph) -> MixedGraph:
    """Reverse every arc; the N-matrix becomes its transpose."""
    return MixedGraph(M.n, tuple((u, v, (-g) % 6) for u, v, g in M.edges))


def neighborhoods(M: MixedGraph, v: int) -> tuple[set[int], set[int], set[int]]:
    """(undirected neighbours, out-neighbours, in-neighbours) of v."""
    if not 0 <= v < M.n:
        raise IndexError(f"vertex {v} out of range for n={M.n}")
    n0, nplus, nminus = set(), set(), set()
    for u, g in M.adjacency()[v].items():
        {0: n0, 1: nplus, 5: nminus}[g].add(u)
    return n0, nplus, nminus


def parse_graph(text: str) -> MixedGraph:
    """Parse the line format ``n m`` followed by m lines ``u v K`` (K in U/F/B)."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected 'n m', got {header!r}", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {header!r}", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count", lineno)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", lineno)
    edges = []
    seen = set()
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise GraphFormatError(f"expected 'u v K', got {ln!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {ln!r}", lineno) from None
        kind = parts[2].upper()
        if kind not in GAIN_OF_KIND:
            raise GraphFormatError(f"edge kind must be U, F or B, got {parts[2]!r}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {ln!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append((u, v, GAIN_OF_KIND[kind]))
    return MixedGraph(n, tuple(edges))


def serialize_graph(M: MixedGraph) -> str:
    out = [f"{M.n} {M.m}"]
    for u, v, g in M.edges:
        if g == 5:
            # canonical output never uses B: an arc v->u is written tail first
            out.append(f"{v} {u} F")
        else:
            out.append(f"{u} {v} {KIND_OF_GAIN[g]}")
    return "\n".join(out) + "\n"


def iter_graphs(text: str) -> Iterator[MixedGraph]:
    """Split a stream of graphs separated by blank lines."""
    block: list[str] = []
    for ln in text.splitlines():
        if ln.strip():
            block.append(ln)
        elif block:
            yield parse_graph("\n".join(block))
            block = []
    if block:
        yield parse_graph("\n".join(block))
