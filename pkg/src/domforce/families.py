"""Named graph families and graph products, with fixed vertex labelings.

Labelings (all 0-based):

* ``path(n)``, ``cycle(n)``: consecutive.
* ``complete_bipartite(m, n)``: parts ``0..m-1`` and ``m..m+n-1``.
* ``star(n)`` = K_{1,n}: centre 0, leaves ``1..n``.
* ``wheel(n)``: n vertices in total, rim cycle ``0..n-2`` and hub ``n-1``.
* ``helm(m)``: rim cycle ``0..m-1``, hub ``m``, pendant ``m+1+i`` on rim vertex ``i``.
* ``coconut(m, n)``: path ``0..m-1``, pendants ``m..m+n-1`` hung on ``m-1``.
* ``hypercube(k)``: vertex = k-bit word, edges between words at Hamming distance 1.
* ``petersen()``: outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i -- i+5``.
* ``grid(p, q)``: grid coordinate (i, j), 1-based, sits at index ``(i-1)*q + (j-1)``.
* ``cartesian(g, h)``: pair (u, v) sits at ``u*|H| + v``.
* ``join(g, h)``, ``corona(g, h)``: G first, then the H copies in order.
* ``rooted_product(g, h, root)``: copy i of H occupies ``i*|H| .. (i+1)*|H|-1``.
* ``splitting(g)``: shadow of v sits at ``|G| + v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, iter_bits


class FamilyError(GraphError):
    pass


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _check(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    _check(m >= 1 and n >= 1, "complete bipartite needs m, n >= 1")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    _check(n >= 1, "star needs n >= 1")
    return complete_bipartite(1, n)


def wheel(n: int) -> Graph:
    _check(n >= 4, "wheel needs n >= 4 (hub plus a rim of length >= 3)")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def helm(m: int) -> Graph:
    _check(m >= 3, "helm needs m >= 3")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(i, m) for i in range(m)]
    edges += [(i, m + 1 + i) for i in range(m)]
    return Graph.from_edges(2 * m + 1, edges)


def coconut(m: int, n: int) -> Graph:
    _check(m >= 2 and n >= 1, "coconut tree needs m >= 2, n >= 1")
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(m - 1, m + j) for j in range(n)]
    return Graph.from_edges(m + n, edges)


def hypercube(k: int) -> Graph:
    _check(k >= 1, "hypercube needs k >= 1")
    n = 1 << k
    return Graph.from_edges(n, [(w, w ^ (1 << b)) for w in range(n) for b in range(k) if w < w ^ (1 << b)])


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def grid_index(p: int, q: int, i: int, j: int) -> int:
    """Index of 1-based grid coordinate (i, j) in ``grid(p, q)``."""
    if not (1 <= i <= p and 1 <= j <= q):
        raise FamilyError(f"coordinate ({i}, {j}) outside {p}x{q} grid")
    return (i - 1) * q + (j - 1)


def grid_coord(p: int, q: int, v: int) -> tuple[int, int]:
    return v // q + 1, v % q + 1


def grid(p: int, q: int) -> Graph:
    _check(p >= 1 and q >= 1, "grid needs p, q >= 1")
    return cartesian(path(p), path(q))


def ladder(n: int) -> Graph:
    _check(n >= 1, "ladder needs n >= 1")
    return grid(2, n)


def prism(n: int) -> Graph:
    return cartesian(cycle(n), path(2))


# -- products ---------------------------------------------------------------


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    off = 0
    for h in graphs:
        edges += [(u + off, v + off) for u, v in h.edges()]
        off += h.n
    return Graph.from_edges(off, edges)


def join(g: Graph, h: Graph) -> Graph:
    base = disjoint_union([g, h])
    edges = base.edges() + [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def generalized_corona(g: Graph, hs: Sequence[Graph]) -> Graph:
    """Attach ``hs[i]`` to vertex i of g, every vertex of ``hs[i]`` adjacent to i."""
    if len(hs) != g.n:
        raise FamilyError(f"generalized corona needs {g.n} operand graphs, got {len(hs)}")
    base = disjoint_union([g, *hs])
    edges = base.edges()
    off = g.n
    for i, h in enumerate(hs):
        edges += [(i, off + v) for v in range(h.n)]
        off += h.n
    return Graph.from_edges(base.n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    return generalized_corona(g, [h] * g.n)


def iterated_corona(g: Graph, h: Graph, k: int) -> Graph:
    _check(k >= 1, "iterated corona needs k >= 1")
    out = g
    for _ in range(k):
        out = corona(out, h)
    return out


def rooted_product_seq(g: Graph, hs: Sequence[Graph], roots: Sequence[int]) -> Graph:
    """Glue root ``roots[i]`` of ``hs[i]`` onto vertex i of g.

    Copy i is laid out contiguously in order; G's edges run between the roots.
    """
    if len(hs) != g.n or len(roots) != g.n:
        raise FamilyError("rooted product needs one rooted graph per vertex of G")
    offsets = []
    off = 0
    for h, r in zip(hs, roots):
        if not 0 <= r < h.n:
            raise FamilyError(f"root {r} invalid for a graph of order {h.n}")
        offsets.append(off)
        off += h.n
    base = disjoint_union(hs)
    edges = base.edges()
    edges += [(offsets[u] + roots[u], offsets[v] + roots[v]) for u, v in g.edges()]
    return Graph.from_edges(off, edges)


def rooted_product(g: Graph, h: Graph, root: int) -> Graph:
    return rooted_product_seq(g, [h] * g.n, [root] * g.n)


def rooted_product_roots(g: Graph, h: Graph, root: int) -> list[int]:
    return [i * h.n + root for i in range(g.n)]


def cartesian(g: Graph, h: Graph) -> Graph:
    m = h.n
    edges = [(u * m + a, u * m + b) for u in range(g.n) for a, b in h.edges()]
    edges += [(u * m + a, v * m + a) for u, v in g.edges() for a in range(m)]
    return Graph.from_edges(g.n * m, edges)


def splitting(g: Graph) -> Graph:
    """Add a shadow vertex ``n+v`` per vertex v, adjacent to every neighbour of v."""
    edges = g.edges()
    for v in range(g.n):
        edges += [(g.n + v, u) for u in iter_bits(g.adj[v])]
    return Graph.from_edges(2 * g.n, edges)


# -- specs ------------------------------------------------------------------

FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "wheel": 1,
    "helm": 1,
    "coconut": 2,
    "hypercube": 1,
    "petersen": 0,
    "grid": 2,
    "ladder": 1,
    "prism": 1,
}

_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "wheel": wheel,
    "helm": helm,
    "coconut": coconut,
    "hypercube": hypercube,
    "petersen": petersen,
    "grid": grid,
    "ladder": ladder,
    "prism": prism,
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in FAMILY_ARITY:
            raise FamilyError(f"unknown family {self.name!r}")
        if len(self.params) != FAMILY_ARITY[self.name]:
            raise FamilyError(f"{self.name} takes {FAMILY_ARITY[self.name]} parameter(s), got {len(self.params)}")
        if self.name == "grid" and self.params[0] > self.params[1]:
            raise FamilyError("grid parameters must satisfy p <= q")

    @property
    def graph_id(self) -> str:
        return f"{self.name}({','.join(map(str, self.params))})"


def make_family(spec: FamilySpec) -> Graph:
    return _BUILDERS[spec.name](*spec.params)


PRODUCT_KINDS = ("join", "corona", "generalized_corona", "iterated_corona", "rooted_product", "cartesian", "splitting")


@dataclass(frozen=True)
class ProductSpec:
    """A product over family operands.

    ``operands`` holds FamilySpecs (or nested ProductSpecs). ``k`` is the
    iteration count for ``iterated_corona``; ``root`` the root index for
    ``rooted_product``. For ``generalized_corona`` the first operand is G and the
    rest are the per-vertex graphs.
    """

    kind: str
    operands: tuple = ()
    k: int = 1
    root: int = 0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in PRODUCT_KINDS:
            raise FamilyError(f"unknown product {self.kind!r}")
        want = {"splitting": 1}.get(self.kind, 2)
        if self.kind == "generalized_corona":
            if len(self.operands) < 1:
                raise FamilyError("generalized corona needs a base graph")
        elif len(self.operands) != want:
            raise FamilyError(f"{self.kind} takes {want} operand(s), got {len(self.operands)}")

    @property
    def graph_id(self) -> str:
        if self.label:
            return self.label
        ops = ",".join(_spec_id(o) for o in self.operands)
        extra = ""
        if self.kind == "iterated_corona":
            extra = f";k={self.k}"
        elif self.kind == "rooted_product":
            extra = f";root={self.root}"
        return f"{self.kind}[{ops}{extra}]"


def _spec_id(o) -> str:
    if isinstance(o, (FamilySpec, ProductSpec)):
        return o.graph_id
    return "graph"


def build(spec) -> Graph:
    """Materialise a FamilySpec, ProductSpec or pass a Graph through."""
    if isinstance(spec, Graph):
        return spec
    if isinstance(spec, FamilySpec):
        return make_family(spec)
    ops = [build(o) for o in spec.operands]
    if spec.kind == "join":
        return join(*ops)
    if spec.kind == "corona":
        return corona(*ops)
    if spec.kind == "generalized_corona":
        return generalized_corona(ops[0], ops[1:])
    if spec.kind == "iterated_corona":
        return iterated_corona(ops[0], ops[1], spec.k)
    if spec.kind == "rooted_product":
        return rooted_product(ops[0], ops[1], spec.root)
    if spec.kind == "cartesian":
        return cartesian(*ops)
    return splitting(ops[0])
