import random

from hypothesis import strategies as st
import pytest

from domforce.graph import Graph
from domforce.sampling import random_connected_graph


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected_graph(n, random.Random(seed))


@st.composite
def graph_and_set(draw, max_n=9, connected=False):
    g = draw(connected_graphs(max_n=max_n) if connected else graphs(max_n=max_n))
    bits = draw(st.integers(0, (1 << g.n) - 1))
    return g, bits


def corpus(count, lo, hi, seed):
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(lo, hi), rng) for _ in range(count)]


@pytest.fixture(scope="session")
def small_connected():
    """300 seeded connected graphs on 1..8 vertices."""
    return corpus(300, 1, 8, "small-connected")
