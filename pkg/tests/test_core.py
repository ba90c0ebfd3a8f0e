import math
import random
from fractions import Fraction

import pytest

from pvg import (DuplicatePointsError, Embedding, Graph, NotNonPathError,
                 Point, SizeMismatchError, complete_graph, cycle_graph,
                 diameter, disjoint_union, hamiltonian_cycle, is_path_graph,
                 path_graph, realizes, visibility_graph)
from pvg.core import _is_hamiltonian_cycle
from pvg.verify import random_embedding


def test_six_point_visibility_graph(six_points, six_point_graph):
    assert visibility_graph(six_points) == six_point_graph


def test_six_point_realizes(six_points, six_point_graph):
    assert realizes(six_points, six_point_graph)
    assert not realizes(six_points, complete_graph(6))


def test_collinear_points_form_path():
    emb = Embedding([Point(i, 0) for i in range(5)])
    g = visibility_graph(emb)
    assert g == path_graph(5)
    assert is_path_graph(g) == [0, 1, 2, 3, 4]


def test_no_three_collinear_is_complete():
    emb = Embedding([Point(i, i * i) for i in range(1, 6)])
    assert visibility_graph(emb) == complete_graph(5)


def test_visibility_blocked_only_by_strict_interior():
    # Middle point blocks the outer pair but sees both.
    emb = Embedding([Point(0, 0), Point(1, 1), Point(2, 2)])
    g = visibility_graph(emb)
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_embedding_rejects_duplicates():
    with pytest.raises(DuplicatePointsError):
        Embedding([Point(0, 0), Point(Fraction(0), Fraction(0))])


def test_empty_and_single_embeddings():
    assert visibility_graph(Embedding([])).n == 0
    assert visibility_graph(Embedding([Point(3, 7)])) == Graph(1, frozenset())


def test_is_path_graph_cases():
    assert is_path_graph(Graph(0, frozenset())) == []
    assert is_path_graph(Graph(1, frozenset())) == [0]
    assert is_path_graph(path_graph(2)) == [0, 1]
    assert is_path_graph(cycle_graph(4)) is None
    assert is_path_graph(complete_graph(3)) is None
    assert is_path_graph(disjoint_union(path_graph(2), path_graph(2))) is None
    # path + triangle has 2 degree-1 ends and right edge count parity issues
    assert is_path_graph(disjoint_union(path_graph(2), cycle_graph(3))) is None


def test_is_path_graph_starts_at_lower_endpoint():
    g = Graph(4, frozenset({(2, 3), (0, 3), (0, 1)}))  # path 1-0-3-2
    assert is_path_graph(g) == [1, 0, 3, 2]


def test_diameter_values():
    assert diameter(complete_graph(4)) == 1
    assert diameter(path_graph(4)) == 3
    assert diameter(Graph(1, frozenset())) == 0
    assert diameter(disjoint_union(path_graph(2), path_graph(2))) == math.inf
    with pytest.raises(ValueError):
        diameter(Graph(0, frozenset()))


def test_non_path_pvg_has_diameter_at_most_two():
    rng = random.Random(5)
    for _ in range(25):
        emb = random_embedding(rng, rng.randrange(3, 10))
        g = visibility_graph(emb)
        assert is_path_graph(g) is None
        assert diameter(g) <= 2


def test_realizes_size_mismatch():
    with pytest.raises(SizeMismatchError):
        realizes(Embedding([Point(0, 0)]), complete_graph(2))


def test_hamiltonian_cycle_verified(six_points):
    g = visibility_graph(six_points)
    cycle = hamiltonian_cycle(six_points)
    assert _is_hamiltonian_cycle(g, cycle)


def test_hamiltonian_cycle_path_raises():
    emb = Embedding([Point(i, 0) for i in range(4)])
    with pytest.raises(NotNonPathError):
        hamiltonian_cycle(emb)


def test_hamiltonian_cycle_random_non_path_embeddings():
    rng = random.Random(11)
    for _ in range(30):
        emb = random_embedding(rng, rng.randrange(3, 10))
        cycle = hamiltonian_cycle(emb)
        assert _is_hamiltonian_cycle(visibility_graph(emb), cycle)


def test_hamiltonian_cycle_two_points_is_a_path():
    with pytest.raises(NotNonPathError):
        hamiltonian_cycle(Embedding([Point(0, 0), Point(1, 2)]))
