"""Seeded random graphs: connected G(n, 1/2) by rejection, and Pruefer trees."""

from __future__ import annotations

import heapq
import random
from itertools import combinations

from .graph import Graph, is_connected


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Uniform over connected labelled graphs on n vertices when p = 1/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    while True:
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def tree_from_pruefer(seq: list[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree on n >= 2 vertices."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])
