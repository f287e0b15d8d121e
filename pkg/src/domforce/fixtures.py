"""Small named graphs with known connected dom-forcing sets.

Vertex names in comments are 1-based (v_1, v_2, ...); index = name - 1.
"""

from __future__ import annotations

from . import families as fam
from .graph import Graph, VertexSet

# C_5 with u_1..u_5 around the cycle; {u_1, u_2, u_3} is a minimum set.
C5 = fam.cycle(5)
C5_WITNESS = VertexSet.of([0, 1, 2])

# Wheel with rim v_1..v_16 and hub v_17 (17 vertices); its rim C_16 needs 14.
WHEEL17 = fam.wheel(17)
WHEEL17_WITNESS = VertexSet.of([0, 1, 16])
CYCLE16 = fam.cycle(16)
CYCLE16_WITNESS = VertexSet.of(range(14))

# Tree on labels 1..7: 3 carries leaves 1, 2; 4 carries leaves 5, 6, 7.
TREE7 = Graph.from_edges(7, [(0, 2), (1, 2), (2, 3), (3, 6), (3, 5), (3, 4)])
TREE7_WITNESS = VertexSet.of([1, 2, 3, 4, 6])
# Subgraph on labels 1, 2, 3, 4, 6, relabelled 0..4 in that order.
SUBTREE5 = TREE7.induced([0, 1, 2, 3, 5])
SUBTREE5_WITNESS = VertexSet.of([1, 2, 3])

# 14-vertex tree with 8 leaves on 4 support vertices (v_4, v_7, v_9, v_12).
TREE14 = Graph.from_edges(
    14,
    [
        (1, 3), (3, 4), (4, 5), (5, 11), (11, 13),  # spine v2-v4-v5-v6-v12-v14
        (0, 3), (2, 3),  # v1, v3 on v4
        (6, 5), (8, 5),  # v7, v9 on v6
        (8, 9), (8, 10),  # v10, v11 on v9
        (7, 6),  # v8 on v7
        (12, 11),  # v13 on v12
    ],
)
TREE14_SUPPORT = VertexSet.of([3, 6, 8, 11])


def splitting_path_witness(n: int) -> VertexSet:
    """Reference connected dom-forcing set of size n-1 for S(P_n), n >= 5.

    v_i is index i-1 and its shadow u_i is index n+i-1.
    """
    v = lambda i: i - 1  # noqa: E731
    u = lambda i: n + i - 1  # noqa: E731
    if n == 5:
        return VertexSet.of([v(2), u(3), v(4), v(5)])
    if n == 6:
        return VertexSet.of([v(2), v(3), u(4), v(5), v(6)])
    if n >= 7:
        return VertexSet.of([v(2), v(3), u(3), u(4)] + [v(i) for i in range(5, n)])
    raise ValueError("reference witness only for n >= 5")


def splitting_cycle_witness(n: int) -> VertexSet:
    """Reference connected dom-forcing set of size n-1 for S(C_n), n >= 7."""
    if n < 7:
        raise ValueError("reference witness only for n >= 7")
    v = lambda i: i - 1  # noqa: E731
    u = lambda i: n + i - 1  # noqa: E731
    return VertexSet.of([v(1), v(2), u(2), u(3)] + [v(i) for i in range(4, n - 1)])


def splitting_star_witness(n: int) -> VertexSet:
    """{u_1, v_2..v_n, v'_2..v'_n} for S(K_{1,n}); centre u_1 = 0, leaf v_i = i."""
    m = n + 1
    return VertexSet.of([0] + list(range(2, n + 1)) + [m + i for i in range(2, n + 1)])
