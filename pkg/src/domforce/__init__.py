"""Exact zero forcing, domination and connected dom-forcing invariants."""

from .graph import DisconnectedGraph, Graph, GraphError, VertexSet
from .solvers import BudgetExceeded, InvariantKind, SolveBudget, SolveResult, solve

__all__ = [
    "BudgetExceeded",
    "DisconnectedGraph",
    "Graph",
    "GraphError",
    "InvariantKind",
    "SolveBudget",
    "SolveResult",
    "VertexSet",
    "solve",
]
__version__ = "0.1.0"
