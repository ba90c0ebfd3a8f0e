"""The blocker transformation and universal-vertex augmentation.

The transformation adds, for every non-edge {u, v} of the input graph, a
"blocker" vertex adjacent to everything; blockers are also mutually
adjacent. The geometric realization places original vertices on the moment
curve (i, i^2) and each blocker on the open segment of its non-edge at a
rational parameter chosen to avoid all lines through previously placed
points, which certifies the result as a point visibility graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterator

from .core import Embedding
from .geometry import Point, line_direction
from .graphs import Graph


@dataclass(frozen=True)
class PhiResult:
    """Transformed graph plus the index sets of originals and blockers."""

    graph: Graph
    original_vertices: frozenset[int]
    blockers: frozenset[int]
    blocked_pairs: tuple[tuple[int, int], ...]  # non-edge per blocker, in index order


def _non_edges(g: Graph) -> list[tuple[int, int]]:
    return sorted(set(combinations(range(g.n), 2)) - g.edges)


def phi(g: Graph) -> PhiResult:
    """Add one universal blocker per non-edge; blockers form a clique.

    Blockers are appended after the original indices in lexicographic
    non-edge order, so the output is deterministic.
    """
    non_edges = _non_edges(g)
    n = g.n
    total = n + len(non_edges)
    edges = set(g.edges)
    for b in range(n, total):
        edges.update((v, b) for v in range(b))
    return PhiResult(
        graph=Graph(total, frozenset(edges)),
        original_vertices=frozenset(range(n)),
        blockers=frozenset(range(n, total)),
        blocked_pairs=tuple(non_edges),
    )


def _unit_rationals() -> Iterator[Fraction]:
    # 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ... : all reduced rationals in (0, 1).
    q = 2
    while True:
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction(p, q)
        q += 1


def _line_groups(q: Point, pts: list[Point]) -> dict[tuple[int, int], list[int]]:
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, p in enumerate(pts):
        groups[line_direction(q, p)].append(i)
    return groups


def _admissible(q: Point, pts: list[Point], allowed: frozenset[int]) -> bool:
    """q is collinear with no pair of existing points except `allowed`."""
    if q in pts:
        return False
    for members in _line_groups(q, pts).values():
        if len(members) > 1 and frozenset(members) != allowed:
            return False
    return True


def moment_curve_embedding(n: int) -> Embedding:
    """n points (i, i^2), i = 1..n; no three are collinear."""
    return Embedding([Point(i, i * i) for i in range(1, n + 1)])


def phi_embedding(g: Graph) -> Embedding:
    """A certified visibility embedding of phi(g).graph.

    Originals go on the moment curve; each blocker is placed on its
    segment at the first admissible parameter from a deterministic
    enumeration of (0, 1) rationals. Only finitely many parameters are
    forbidden per segment, so the search always terminates.
    """
    pts = [Point(i, i * i) for i in range(1, g.n + 1)]
    for u, v in _non_edges(g):
        a, b = pts[u], pts[v]
        allowed = frozenset((u, v))
        for t in _unit_rationals():
            q = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
            if _admissible(q, pts, allowed):
                pts.append(q)
                break
    return Embedding(pts)


def add_universal(g: Graph, count: int) -> Graph:
    """Append `count` vertices adjacent to every other vertex."""
    if count < 0:
        raise ValueError("count must be non-negative")
    total = g.n + count
    edges = set(g.edges)
    for b in range(g.n, total):
        edges.update((v, b) for v in range(b))
    return Graph(total, frozenset(edges))


def add_universal_point(emb: Embedding) -> Embedding:
    """Append one point visible from all existing points.

    Candidates are scanned on a vertical line strictly right of every
    existing x-coordinate at integer heights 0, 1, 2, ...; the first point
    on no line through two existing points is taken.
    """
    pts = list(emb.points)
    if not pts:
        return Embedding([Point(0, 0)])
    max_x = max(p.x for p in pts)
    x = Fraction(int(max_x) + 1)
    y = 0
    while True:
        q = Point(x, y)
        if _admissible(q, pts, frozenset()):
            return Embedding(pts + [q])
        y += 1
