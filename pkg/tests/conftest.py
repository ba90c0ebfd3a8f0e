from fractions import Fraction

import pytest

from pvg import Embedding, Graph, Point

# The 6-point reference configuration used throughout the suite: 6 points,
# 11 visible pairs (4 of the 15 pairs are blocked by intermediate points).
SIX_POINTS = [
    Point(2, 2),
    Point(2, Fraction(2, 3)),
    Point(1, 1),
    Point(3, 1),
    Point(0, 0),
    Point(4, 0),
]

SIX_POINT_EDGES = frozenset({
    (0, 1), (0, 2), (0, 3),
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 3), (2, 4),
    (3, 5),
    (4, 5),
})


@pytest.fixture
def six_points() -> Embedding:
    return Embedding(SIX_POINTS)


@pytest.fixture
def six_point_graph() -> Graph:
    return Graph(6, SIX_POINT_EDGES)


@pytest.fixture
def four_cycle_with_chord() -> Graph:
    # 4 vertices, 4 edges, exactly 2 non-edges: (0,1) and (1,3).
    return Graph(4, frozenset({(0, 3), (2, 3), (1, 2), (0, 2)}))
