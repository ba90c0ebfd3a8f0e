import math

import pytest

from pvg import (GridSpec, abbott_bounds, abbott_lower, abbott_upper,
                 bounds_csv, bounds_table, fpt_dominating, grid_embedding,
                 grid_index, grid_min_dominating, grid_points, grid_pvg,
                 grid_visible, is_dominating, solve_min_dominating,
                 visibility_graph)


def test_grid_visible_coprimality():
    assert grid_visible((1, 1), (2, 2))          # gcd(1,1)=1
    assert not grid_visible((1, 1), (3, 3))      # blocked by (2,2)
    assert grid_visible((1, 1), (2, 3))
    assert not grid_visible((1, 1), (1, 3))      # gcd(0,2)=2
    assert grid_visible((1, 1), (1, 2))          # gcd(0,1)=1
    with pytest.raises(ValueError):
        grid_visible((1, 1), (1, 1))


def test_grid_index_contract():
    spec = GridSpec(3, 4)
    assert grid_index(spec, 1, 1) == 0
    assert grid_index(spec, 1, 4) == 3
    assert grid_index(spec, 3, 4) == 11
    assert grid_points(spec)[grid_index(spec, 2, 3)] == (2, 3)


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(0, 3)


def test_grid_pvg_2x2_complete():
    g = grid_pvg(GridSpec(2, 2))
    assert len(g.edges) == 6  # all pairs at distance with coprime deltas


def test_grid_pvg_matches_geometry_small():
    for n, m in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)]:
        spec = GridSpec(n, m)
        assert grid_pvg(spec) == visibility_graph(grid_embedding(spec))


def test_abbott_bounds_conventions():
    assert abbott_upper(2) == pytest.approx(4 * math.log(2))
    assert abbott_lower(3) == pytest.approx(math.log(3) / (2 * math.log(math.log(3))))
    assert abbott_bounds(2) == (None, pytest.approx(4 * math.log(2)))
    with pytest.raises(ValueError):
        abbott_lower(2)
    with pytest.raises(ValueError):
        abbott_upper(1)


def test_grid_min_dominating_small_values():
    assert len(grid_min_dominating(1).set) == 1
    assert len(grid_min_dominating(2).set) == 1
    assert len(grid_min_dominating(3).set) == 1
    assert len(grid_min_dominating(4).set) == 2


def test_grid_min_dominating_matches_generic_oracle():
    for n in (2, 3, 4, 5):
        g = grid_pvg(GridSpec(n, n))
        assert len(grid_min_dominating(n).set) == len(solve_min_dominating(g).set)


def test_grid_min_dominating_is_verified_and_dominating():
    for n in (3, 5):
        w = grid_min_dominating(n)
        assert w.verified
        assert is_dominating(grid_pvg(GridSpec(n, n)), w.set)


def test_grid_min_dominating_deterministic_lex_least():
    a = grid_min_dominating(4)
    b = grid_min_dominating(4)
    assert a == b
    # lexicographically least optimum among all optimum sets
    from itertools import combinations
    g = grid_pvg(GridSpec(4, 4))
    optima = [list(c) for c in combinations(range(16), len(a.set))
              if is_dominating(g, c)]
    assert sorted(a.set) == min(optima)


def test_bounds_table_and_csv():
    rows = bounds_table(4)
    assert [r.n for r in rows] == [2, 3, 4]
    assert [r.f_n for r in rows] == [1, 1, 2]
    assert math.isnan(rows[0].lower)
    text = bounds_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "n,f,lower,upper"
    assert lines[1].startswith("2,1,nan,")
    assert text.endswith("\n")
    with pytest.raises(ValueError):
        bounds_table(1)


def test_fpt_dominating():
    assert not fpt_dominating(3, 0).answer
    assert fpt_dominating(3, 1).answer
    w = fpt_dominating(4, 2)
    assert w.answer and is_dominating(grid_pvg(GridSpec(4, 4)), w.certificate)
    assert not fpt_dominating(4, 1).answer
    # presolve path: with a threshold, budgets under the lower bound are "no"
    assert not fpt_dominating(9, 0, presolve_threshold=3).answer
    with pytest.raises(ValueError):
        fpt_dominating(0, 1)
