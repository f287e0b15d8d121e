"""Immutable simple graphs over bitmask adjacency rows.

Vertices are dense integers ``0..n-1``. Vertex sets are carried as
:class:`VertexSet`, a thin immutable wrapper over a Python ``int`` bitmask;
the hot paths in the solvers work on the raw ``int`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_N = 1024


class GraphError(ValueError):
    """Raised for malformed graphs or graph input."""


class DisconnectedGraph(GraphError):
    """Raised when an operation that requires a connected graph gets one that isn't."""


def bits_of(vertices: Iterable[int]) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


def iter_bits(b: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


@dataclass(frozen=True, order=True)
class VertexSet:
    """Immutable set of vertex indices backed by an integer bitmask."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("VertexSet bits must be non-negative")

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(bits_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def complement(self, n: int) -> "VertexSet":
        return VertexSet(((1 << n) - 1) & ~self.bits)

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def add(self, v: int) -> "VertexSet":
        return VertexSet(self.bits | (1 << v))

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(map(str, self)) + "})"


VertexLike = Union[VertexSet, Iterable[int]]


def as_bits(s: VertexLike) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    return bits_of(s)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[i]`` is the neighbourhood bitmask of ``i``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"row {i} references a vertex >= n")
            if (row >> i) & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                if not (self.adj[j] >> i) & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(r).count("1") for r in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled to ``0..len-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def neighbors(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return VertexSet(g.adj[v])


def _component_bits(adj: Sequence[int], within: int, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_bits(adj: Sequence[int], s: int) -> bool:
    """True iff the bitmask ``s`` induces a connected subgraph; empty is not connected."""
    if s == 0:
        return False
    start = (s & -s).bit_length() - 1
    return _component_bits(adj, s, start) == s


def induced_connected(g: Graph, s: VertexLike) -> bool:
    return connected_bits(g.adj, as_bits(s))


def is_connected(g: Graph) -> bool:
    return connected_bits(g.adj, g.full)


def components(g: Graph) -> list[VertexSet]:
    out = []
    rest = g.full
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _component_bits(g.adj, g.full, start)
        out.append(VertexSet(comp))
        rest &= ~comp
    return out


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"graph with n={g.n} is not connected")


def closed_neighborhoods(g: Graph) -> tuple[int, ...]:
    return tuple(row | (1 << i) for i, row in enumerate(g.adj))


def dominated_bits(g: Graph, s: int) -> int:
    d = s
    for v in iter_bits(s):
        d |= g.adj[v]
    return d


def is_dominating(g: Graph, s: VertexLike) -> bool:
    return dominated_bits(g, as_bits(s)) == g.full
