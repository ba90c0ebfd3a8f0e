import random
from math import comb

import pytest

from pvg import (Graph, complete_graph, cycle_graph, empty_graph,
                 add_universal, add_universal_point, moment_curve_embedding,
                 phi, phi_embedding, realizes, visibility_graph)
from pvg.verify import random_graph


def test_phi_complete_graph_adds_nothing():
    res = phi(complete_graph(4))
    assert res.graph == complete_graph(4)
    assert not res.blockers and not res.blocked_pairs


def test_phi_empty_graph_blocks_every_pair():
    res = phi(empty_graph(3))
    # Original pairs stay non-adjacent; every pair involving a blocker is
    # an edge (blockers are universal and mutually adjacent).
    expected = frozenset((u, v) for u in range(6) for v in range(u + 1, 6)
                         if v >= 3)
    assert res.graph == Graph(6, expected)
    assert res.blockers == frozenset({3, 4, 5})
    assert res.blocked_pairs == ((0, 1), (0, 2), (1, 2))


def test_phi_blocker_count_is_nonedge_count(four_cycle_with_chord):
    g = four_cycle_with_chord
    res = phi(g)
    assert len(res.blockers) == comb(g.n, 2) - len(g.edges) == 2
    assert res.graph.n == g.n + 2


def test_phi_preserves_original_subgraph(four_cycle_with_chord):
    g = four_cycle_with_chord
    res = phi(g)
    assert res.graph.induced(sorted(res.original_vertices)) == g


def test_phi_blockers_are_universal_and_cliqued():
    g = cycle_graph(5)
    res = phi(g)
    for b in res.blockers:
        assert res.graph.degree(b) == res.graph.n - 1


def test_phi_blocked_pairs_are_exactly_the_nonedges():
    g = cycle_graph(5)
    res = phi(g)
    nonedges = {(u, v) for u in range(5) for v in range(u + 1, 5)
                if not g.has_edge(u, v)}
    assert set(res.blocked_pairs) == nonedges


def test_moment_curve_embedding_is_complete():
    emb = moment_curve_embedding(6)
    assert visibility_graph(emb) == complete_graph(6)


def test_phi_embedding_certifies(four_cycle_with_chord):
    g = four_cycle_with_chord
    emb = phi_embedding(g)
    assert realizes(emb, phi(g).graph)


def test_phi_embedding_places_blockers_on_their_segments(four_cycle_with_chord):
    from pvg import point_on_open_segment
    g = four_cycle_with_chord
    res = phi(g)
    emb = phi_embedding(g)
    for b, (u, v) in zip(sorted(res.blockers), res.blocked_pairs):
        assert point_on_open_segment(emb.points[b], emb.points[u], emb.points[v])


def test_phi_embedding_random_certification():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(2, 8))
        assert realizes(phi_embedding(g), phi(g).graph)


def test_phi_is_deterministic():
    g = cycle_graph(6)
    assert phi(g) == phi(g)
    assert phi_embedding(g) == phi_embedding(g)


def test_add_universal():
    g = add_universal(path_graph_3 := Graph(3, frozenset({(0, 1), (1, 2)})), 2)
    assert g.n == 5
    for b in (3, 4):
        assert g.degree(b) == 4
    assert g.induced([0, 1, 2]) == path_graph_3
    with pytest.raises(ValueError):
        add_universal(path_graph_3, -1)


def test_add_universal_point_sees_everything(six_points):
    emb2 = add_universal_point(six_points)
    g = visibility_graph(emb2)
    new = len(emb2.points) - 1
    assert g.degree(new) == new  # adjacent to all previous points
