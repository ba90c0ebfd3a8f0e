import random

import pytest

from pvg import (Embedding, NotNonPathError, Point,
                 is_dominating, min_degree_dominating, solve_min_dominating,
                 star_lines, visibility_graph)
from pvg.domination import _pattern_selection
from pvg.verify import random_embedding


def test_star_lines_cover_all_points(six_points):
    sl = star_lines(six_points)
    g = visibility_graph(six_points)
    covered = {sl.center}
    for line in sl.lines:
        covered.update(line.points)
    assert covered == set(range(g.n))


def test_star_lines_center_is_lowest_min_degree(six_points):
    g = visibility_graph(six_points)
    degrees = g.degrees()
    sl = star_lines(six_points)
    assert degrees[sl.center] == min(degrees)
    assert all(degrees[v] > min(degrees) for v in range(sl.center))


def test_star_lines_line_count_within_min_degree(six_points):
    g = visibility_graph(six_points)
    sl = star_lines(six_points)
    assert len(sl.lines) <= min(g.degrees())


def test_star_lines_designated_are_neighbors(six_points):
    g = visibility_graph(six_points)
    sl = star_lines(six_points)
    nbrs = g.neighbors(sl.center)
    for line in sl.lines:
        assert 1 <= len(line.neighbors) <= 2
        assert all(v in nbrs for v in line.neighbors)


def test_star_lines_rejects_paths():
    with pytest.raises(NotNonPathError):
        star_lines(Embedding([Point(i, 0) for i in range(4)]))


def test_star_lines_needs_three_points():
    with pytest.raises(NotNonPathError):
        # 2 points form a path, caught before the size check
        star_lines(Embedding([Point(0, 0), Point(1, 1)]))


def test_star_lines_random_invariants():
    rng = random.Random(13)
    for _ in range(25):
        emb = random_embedding(rng, rng.randrange(4, 10))
        g = visibility_graph(emb)
        sl = star_lines(emb)
        assert len(sl.lines) <= min(g.degrees())
        covered = {sl.center}
        for line in sl.lines:
            covered.update(line.points)
        assert covered == set(range(g.n))


def test_pattern_selection_size_bound():
    # The selected positions never exceed floor(m/2) + 1 lines.
    class L:
        def __init__(self, i):
            self.neighbors = (i,)

    for m in range(1, 20):
        lines = tuple(L(i) for i in range(m))
        assert len(_pattern_selection(lines)) <= m // 2 + 1


def test_min_degree_dominating_bound_and_verification(six_points):
    g = visibility_graph(six_points)
    delta = min(g.degrees())
    w = min_degree_dominating(six_points)
    assert w.verified
    assert is_dominating(g, w.set)
    assert len(w.set) <= delta // 2 + 1


def test_min_degree_dominating_random():
    rng = random.Random(17)
    for _ in range(40):
        emb = random_embedding(rng, rng.randrange(3, 11))
        g = visibility_graph(emb)
        delta = min(g.degrees())
        w = min_degree_dominating(emb)
        assert w.verified and is_dominating(g, w.set)
        assert len(w.set) <= delta // 2 + 1
        assert len(solve_min_dominating(g).set) <= len(w.set)


def test_min_degree_dominating_rejects_paths():
    with pytest.raises(NotNonPathError):
        min_degree_dominating(Embedding([Point(i, 0) for i in range(5)]))
