"""Colour-change rule, forcing closure and the forcing-based set predicates."""

from __future__ import annotations

from dataclasses import dataclass
import random
from typing import Sequence

from .graph import (
    Graph,
    VertexLike,
    VertexSet,
    as_bits,
    connected_bits,
    dominated_bits,
    iter_bits,
    require_connected,
)


@dataclass(frozen=True)
class ForcingTrace:
    initial: VertexSet
    forces: tuple[tuple[int, int], ...]
    final: VertexSet

    def lines(self) -> list[str]:
        return [f"{u} -> {v}" for u, v in self.forces]


def closure_bits(adj: Sequence[int], black: int) -> int:
    """Forcing closure of ``black`` using per-vertex white-neighbour counts."""
    white_count = {}
    queue = []
    for u in iter_bits(black):
        c = (adj[u] & ~black).bit_count()
        white_count[u] = c
        if c == 1:
            queue.append(u)
    while queue:
        u = queue.pop()
        if white_count[u] != 1:
            continue
        w = adj[u] & ~black
        v = w.bit_length() - 1
        black |= w
        for x in iter_bits(adj[v] & black):
            c = white_count[x] - 1
            white_count[x] = c
            if c == 1:
                queue.append(x)
        c = (adj[v] & ~black).bit_count()
        white_count[v] = c
        if c == 1:
            queue.append(v)
    return black


def closure_naive_bits(adj: Sequence[int], black: int) -> int:
    """Reference closure: rescan from the lowest index after every single force."""
    while True:
        for u in iter_bits(black):
            w = adj[u] & ~black
            if w and not w & (w - 1):
                black |= w
                break
        else:
            return black


def closure_random_schedule_bits(adj: Sequence[int], black: int, rng: random.Random) -> int:
    """Closure firing a uniformly random eligible force at each step."""
    while True:
        eligible = []
        for u in iter_bits(black):
            w = adj[u] & ~black
            if w and not w & (w - 1):
                eligible.append(w)
        if not eligible:
            return black
        black |= rng.choice(eligible)


def closure(g: Graph, black: VertexLike) -> VertexSet:
    return VertexSet(closure_bits(g.adj, as_bits(black)))


def trace(g: Graph, black: VertexLike) -> ForcingTrace:
    """Forcing chronicle under the lowest-index-forcer-first schedule."""
    start = as_bits(black)
    cur = start
    forces = []
    while True:
        for u in iter_bits(cur):
            w = g.adj[u] & ~cur
            if w and not w & (w - 1):
                forces.append((u, w.bit_length() - 1))
                cur |= w
                break
        else:
            break
    return ForcingTrace(VertexSet(start), tuple(forces), VertexSet(cur))


def replay_ok(g: Graph, t: ForcingTrace) -> bool:
    """Check every recorded force was legal at the moment it fired."""
    cur = t.initial.bits
    for u, v in t.forces:
        if not (cur >> u) & 1 or (cur >> v) & 1:
            return False
        if g.adj[u] & ~cur != 1 << v:
            return False
        cur |= 1 << v
    return cur == t.final.bits


def is_zfs(g: Graph, s: VertexLike) -> bool:
    return closure_bits(g.adj, as_bits(s)) == g.full


def is_czfs(g: Graph, s: VertexLike) -> bool:
    require_connected(g)
    b = as_bits(s)
    return connected_bits(g.adj, b) and closure_bits(g.adj, b) == g.full


def is_dom_forcing(g: Graph, s: VertexLike) -> bool:
    b = as_bits(s)
    return dominated_bits(g, b) == g.full and closure_bits(g.adj, b) == g.full


def is_connected_dom_forcing(g: Graph, s: VertexLike) -> bool:
    require_connected(g)
    b = as_bits(s)
    return (
        dominated_bits(g, b) == g.full
        and connected_bits(g.adj, b)
        and closure_bits(g.adj, b) == g.full
    )
