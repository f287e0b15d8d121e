"""Exact minimum-set solvers for the forcing / domination invariants.

Two routes are provided for every invariant:

``oracle``
    Enumerate vertex subsets by increasing size, lexicographically within a
    size; the first feasible subset is returned. Exhaustion of all smaller
    sizes certifies minimality, and the witness is the lexicographically
    least minimum one.

``optimized``
    For the connected invariants (Zc, GammaC, Fcd) only connected vertex sets
    are generated, level by level, by extending each connected set with a
    neighbouring vertex. For Z, Gamma and Fd the subset enumeration starts
    at a sound lower bound (minimum degree for forcing sets, ``n/(Delta+1)``
    for dominating sets).

The max leaf number is computed as ``n - gamma_c`` and cross-checked in the
tests against an explicit spanning tree enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
import enum
from itertools import combinations
import math
import time
from typing import Iterator, Optional

from .forcing import closure_bits
from .graph import (
    DisconnectedGraph,
    Graph,
    GraphError,
    VertexSet,
    connected_bits,
    dominated_bits,
    is_connected,
)


class InvariantKind(enum.Enum):
    Z = "z"
    Zc = "zc"
    Gamma = "gamma"
    GammaC = "gammac"
    Fd = "fd"
    Fcd = "fcd"
    MaxLeaf = "maxleaf"

    @classmethod
    def parse(cls, text: str) -> "InvariantKind":
        t = text.strip().lower().replace("_", "")
        for k in cls:
            if k.value == t or k.name.lower() == t:
                return k
        raise ValueError(f"unknown invariant {text!r}")

    @property
    def connected(self) -> bool:
        return self in (InvariantKind.Zc, InvariantKind.GammaC, InvariantKind.Fcd, InvariantKind.MaxLeaf)


_NEEDS_DOM = {InvariantKind.Gamma, InvariantKind.GammaC, InvariantKind.Fd, InvariantKind.Fcd}
_NEEDS_ZFS = {InvariantKind.Z, InvariantKind.Zc, InvariantKind.Fd, InvariantKind.Fcd}
_NEEDS_CONN = {InvariantKind.Zc, InvariantKind.GammaC, InvariantKind.Fcd}


class BudgetExceeded(RuntimeError):
    """The search hit its budget before certifying a minimum.

    ``upper_bound`` is the best feasible size known at that point.
    """

    def __init__(self, kind: InvariantKind, upper_bound: int, checked: int, reached_size: int):
        self.kind = kind
        self.upper_bound = upper_bound
        self.checked = checked
        self.reached_size = reached_size
        super().__init__(
            f"{kind.name}: budget exhausted after {checked} candidates at size {reached_size}; "
            f"best known upper bound {upper_bound}"
        )


class UndefinedInvariant(GraphError):
    pass


@dataclass(frozen=True)
class SolveBudget:
    max_candidates: Optional[int] = None
    max_size: Optional[int] = None


UNLIMITED = SolveBudget()


@dataclass(frozen=True)
class SolveResult:
    kind: InvariantKind
    value: int
    witness: VertexSet
    candidates_checked: int
    elapsed: float
    method: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "value": self.value,
            "witness": self.witness.to_list(),
            "candidates_checked": self.candidates_checked,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "method": self.method,
        }


def feasible(g: Graph, kind: InvariantKind, s: int) -> bool:
    """Feasibility predicate for ``kind``; for MaxLeaf ``s`` is the leaf set."""
    if kind is InvariantKind.MaxLeaf:
        rest = g.full & ~s
        return dominated_bits(g, rest) == g.full and connected_bits(g.adj, rest)
    full = g.full
    if kind in _NEEDS_DOM and dominated_bits(g, s) != full:
        return False
    if kind in _NEEDS_CONN and not connected_bits(g.adj, s):
        return False
    if kind in _NEEDS_ZFS and closure_bits(g.adj, s) != full:
        return False
    return True


def _validate(g: Graph, kind: InvariantKind) -> None:
    if g.n < 1:
        raise GraphError("solvers need a non-empty graph")
    if kind.connected and not is_connected(g):
        raise DisconnectedGraph(f"{kind.name} needs a connected graph")
    if kind is InvariantKind.MaxLeaf and g.n <= 2:
        raise UndefinedInvariant("max leaf number is only used here for n > 2")


class _Counter:
    def __init__(self, kind: InvariantKind, budget: SolveBudget, upper: int):
        self.kind = kind
        self.budget = budget
        self.checked = 0
        self.upper = upper

    def tick(self, size: int) -> None:
        self.checked += 1
        cap = self.budget.max_candidates
        if cap is not None and self.checked > cap:
            raise BudgetExceeded(self.kind, self.upper, self.checked - 1, size)

    def size_ok(self, size: int) -> None:
        cap = self.budget.max_size
        if cap is not None and size > cap:
            raise BudgetExceeded(self.kind, self.upper, self.checked, size)


def _lower_bound(g: Graph, kind: InvariantKind) -> int:
    lo = 1
    degs = g.degrees()
    if kind in _NEEDS_ZFS:
        # the first force needs a black vertex with all but one neighbour black
        lo = max(lo, min(degs))
    if kind in _NEEDS_DOM:
        lo = max(lo, math.ceil(g.n / (max(degs) + 1)))
    if kind is InvariantKind.Fcd and g.n >= 3:
        lo = max(lo, 2)
    return min(lo, g.n)


def _search_subsets(g: Graph, kind: InvariantKind, start: int, counter: _Counter) -> int:
    for k in range(start, g.n + 1):
        counter.size_ok(k)
        for combo in combinations(range(g.n), k):
            counter.tick(k)
            s = 0
            for v in combo:
                s |= 1 << v
            if feasible(g, kind, s):
                return s
    raise AssertionError("whole vertex set must be feasible")


def connected_sets_by_size(g: Graph, max_size: Optional[int] = None) -> Iterator[tuple[int, dict[int, int]]]:
    """Yield ``(k, {set: open_neighbourhood})`` for k = 1, 2, ... over connected sets.

    Each level is built from the previous one by adding a neighbouring vertex;
    every connected set of size k+1 has a non-cut vertex, so nothing is missed.
    """
    adj = g.adj
    level = {1 << v: adj[v] for v in range(g.n)}
    k = 1
    while level:
        yield k, level
        if max_size is not None and k >= max_size:
            return
        nxt: dict[int, int] = {}
        for s, nb in level.items():
            ext = nb & ~s
            while ext:
                low = ext & -ext
                ext ^= low
                t = s | low
                if t not in nxt:
                    nxt[t] = nb | adj[low.bit_length() - 1]
        level = nxt
        k += 1


def _search_connected(g: Graph, kind: InvariantKind, start: int, counter: _Counter) -> int:
    full = g.full
    adj = g.adj
    want_dom = kind in _NEEDS_DOM
    want_zfs = kind in _NEEDS_ZFS
    cap = counter.budget.max_candidates
    for k, level in connected_sets_by_size(g):
        # level generation itself is the memory cost, so bound it by the budget too
        if cap is not None and len(level) > cap:
            raise BudgetExceeded(kind, counter.upper, counter.checked, k)
        if k < start:
            continue
        counter.size_ok(k)
        for s, nb in level.items():
            counter.tick(k)
            if want_dom and (s | nb) != full:
                continue
            if want_zfs and closure_bits(adj, s) != full:
                continue
            return s
    raise AssertionError("whole vertex set must be feasible")


def solve(
    g: Graph,
    kind: InvariantKind,
    budget: SolveBudget = UNLIMITED,
    method: str = "optimized",
) -> SolveResult:
    """Exact value of ``kind`` on ``g`` with a minimum witness.

    For MaxLeaf the value is the max leaf number and the witness is a leaf
    set whose complement is a minimum connected dominating set.
    """
    if isinstance(kind, str):
        kind = InvariantKind.parse(kind)
    if method not in ("oracle", "optimized"):
        raise ValueError(f"unknown method {method!r}")
    _validate(g, kind)
    t0 = time.perf_counter()
    target = InvariantKind.GammaC if kind is InvariantKind.MaxLeaf else kind
    counter = _Counter(kind, budget, g.n)
    if method == "oracle":
        s = _search_subsets(g, target, 1, counter)
    elif target in _NEEDS_CONN:
        s = _search_connected(g, target, _lower_bound(g, target), counter)
    else:
        s = _search_subsets(g, target, _lower_bound(g, target), counter)
    if kind is InvariantKind.MaxLeaf:
        s = g.full & ~s
    witness = VertexSet(s)
    if not feasible(g, kind, s):
        raise RuntimeError(f"internal error: {kind.name} witness {witness} failed re-validation")
    return SolveResult(kind, len(witness), witness, counter.checked, time.perf_counter() - t0, method)


def value(g: Graph, kind: InvariantKind | str, method: str = "optimized") -> int:
    return solve(g, kind, method=method).value


def all_minimum_sets(g: Graph, kind: InvariantKind) -> list[VertexSet]:
    """Every minimum feasible set for ``kind`` (exhaustive at the minimum size)."""
    k = solve(g, kind).value
    if kind is InvariantKind.MaxLeaf:
        raise ValueError("all_minimum_sets is for minimisation invariants")
    out = []
    for combo in combinations(range(g.n), k):
        s = 0
        for v in combo:
            s |= 1 << v
        if feasible(g, kind, s):
            out.append(VertexSet(s))
    return out


def maxleaf(g: Graph) -> int:
    """Max leaf number via ``n - gamma_c``; valid for connected g with n > 2."""
    return solve(g, InvariantKind.MaxLeaf).value


SPANNING_TREE_MAX_N = 9


def spanning_tree_leaf_oracle(g: Graph) -> int:
    """Maximum leaf count over all spanning trees, by explicit enumeration."""
    return max_leaf_spanning_tree(g)[0]


def max_leaf_spanning_tree(g: Graph) -> tuple[int, VertexSet]:
    """Best leaf count and the leaf set of a spanning tree attaining it.

    Edges are decided in order: included when they join two components,
    excluded only if the remaining edges can still connect the graph, so every
    branch ends in a spanning tree.
    """
    if not 3 <= g.n <= SPANNING_TREE_MAX_N:
        raise ValueError(f"spanning tree enumeration supports 3 <= n <= {SPANNING_TREE_MAX_N}")
    if not is_connected(g):
        raise DisconnectedGraph("spanning trees need a connected graph")
    n = g.n
    edges = g.edges()
    m = len(edges)
    best = (0, 0)

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connectable(parent, idx):
        comp = [find(parent, v) for v in range(n)]
        p = list(range(n))

        def f(x):
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        for v in range(n):
            a, b = f(v), f(comp[v])
            if a != b:
                p[a] = b
        for u, v in edges[idx:]:
            a, b = f(u), f(v)
            if a != b:
                p[a] = b
        root = f(0)
        return all(f(v) == root for v in range(n))

    def rec(idx, parent, deg, used):
        nonlocal best
        if used == n - 1:
            leaves = 0
            for v, d in enumerate(deg):
                if d == 1:
                    leaves |= 1 << v
            count = leaves.bit_count()
            if count > best[0]:
                best = (count, leaves)
            return
        if idx == m or m - idx < n - 1 - used:
            return
        u, v = edges[idx]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            p2 = list(parent)
            p2[ru] = rv
            d2 = list(deg)
            d2[u] += 1
            d2[v] += 1
            rec(idx + 1, p2, d2, used + 1)
            if still_connectable(parent, idx + 1):
                rec(idx + 1, parent, deg, used)
        else:
            rec(idx + 1, parent, deg, used)

    rec(0, list(range(n)), [0] * n, 0)
    return best[0], VertexSet(best[1])
