from itertools import combinations

import pytest
from hypothesis import strategies as st

from topograph.core import SimpleGraph


def brute_topo(n):
    """G_tau(n) built from frozensets, sharing nothing with the bitmask path.

    Vertex i is the subset whose mask is i + 1.
    """
    family = {}
    for k in range(1, n):
        for c in combinations(range(1, n + 1), k):
            family[sum(1 << (e - 1) for e in c)] = frozenset(c)
    masks = sorted(family)
    edges = [(masks.index(a), masks.index(b))
             for a, b in combinations(masks, 2) if not family[a] & family[b]]
    return SimpleGraph.from_edges(len(masks), edges)


@st.composite
def graphs(draw, min_order=1, max_order=10):
    order = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(order), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(order, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def topo():
    from topograph.core import build_topo_graph, to_simple
    return lambda n: to_simple(build_topo_graph(n))
