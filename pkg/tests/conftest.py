import random

import pytest
from hypothesis import strategies as st

from nearindep.graphs import Graph, graph_from_pair_mask, make_graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << npairs) - 1)) if npairs else 0
    return graph_from_pair_mask(n, mask)


@st.composite
def forests(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    """Random labelled forest: random parent links, some dropped."""
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        if draw(st.booleans()):
            edges.append((draw(st.integers(0, v - 1)), v))
    return make_graph(n, edges)


def random_graph(n: int, rng: random.Random) -> Graph:
    npairs = n * (n - 1) // 2
    return graph_from_pair_mask(n, rng.getrandbits(npairs) if npairs else 0)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
