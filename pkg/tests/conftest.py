"""Shared fixtures: the worked example graphs and small builders."""

from __future__ import annotations

from biclique_imbalance import Bipartition, Graph

# 5-vertex example used throughout: edges a-b, a-c, b-c, b-d, c-e. The
# ordering (a, b, c, d, e) has per-vertex imbalances 2, 1, 1, 1, 1 (total 6).
EXAMPLE_EDGES = [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "e")]

# 11-vertex chained example: K(2,2) + K(2,2) + K(2,3) glued at x2 and y4.
CHAINED_EDGES = [
    ("x1", "y1"), ("x1", "y2"),
    ("x2", "y1"), ("x2", "y2"), ("x2", "y3"), ("x2", "y4"),
    ("x3", "y3"), ("x3", "y4"),
    ("x4", "y4"), ("x4", "y5"), ("x4", "y6"),
    ("x5", "y4"), ("x5", "y5"), ("x5", "y6"),
]


def example_graph() -> Graph:
    return Graph((), EXAMPLE_EDGES)


def chained_example_graph() -> Graph:
    return Graph((), CHAINED_EDGES)


def complete_bigraph(a: int, b: int) -> tuple[Graph, Bipartition]:
    """K(a, b) on vertices x1..xa / y1..yb with the natural bipartition."""
    xs = [f"x{i}" for i in range(1, a + 1)]
    ys = [f"y{i}" for i in range(1, b + 1)]
    g = Graph((), [(x, y) for x in xs for y in ys])
    return g, Bipartition(frozenset(xs), frozenset(ys))
