"""Constructive dominating sets from a min-degree star of lines.

Given a visibility embedding of a non-path PVG, all points lie on the at
most delta lines through a minimum-degree vertex and its neighbors.
Selecting neighbors on a pattern of adjacent lines yields a dominating
set of size at most floor(delta/2) + 1; the output is always verified
before it is returned, with a greedy and then an exact capped search as
fallbacks so a certified set is produced whenever the bound is attainable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .core import Embedding, is_path_graph, visibility_graph
from .errors import CoverageViolationError, NotNonPathError, BoundViolationError
from .geometry import Point, line_direction
from .graphs import adjacency_masks
from .solvers import DominatingWitness, dominating_set_of_size, is_dominating

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StarLine:
    """One line through the center: its direction, points, and designated neighbors."""

    direction: tuple[int, int]
    points: tuple[int, ...]          # all non-center points on the line, by position
    neighbors: tuple[int, ...]       # nearest center-neighbor per occupied side (1 or 2)


@dataclass(frozen=True)
class StarLines:
    center: int
    lines: tuple[StarLine, ...]      # cyclic (fan) order by exact angle


def _signed_param(p: Point, center: Point, direction: tuple[int, int]) -> Fraction:
    dx, dy = p.x - center.x, p.y - center.y
    if direction[0] != 0:
        return dx / direction[0]
    return dy / direction[1]


def star_lines(emb: Embedding) -> StarLines:
    """Group all points by the line through a minimum-degree vertex.

    The center is the lowest-index vertex of minimum degree. Lines are
    sorted cyclically by exact angle comparison of their canonical
    directions. Every line must contain a neighbor of the center on each
    occupied side (the nearest point of a ray is always visible); a
    violation indicates an implementation bug and raises loudly.
    """
    g = visibility_graph(emb)
    if is_path_graph(g) is not None:
        raise NotNonPathError("star lines are defined for non-path PVGs only")
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    degrees = g.degrees()
    delta = min(degrees)
    center = degrees.index(delta)
    p = emb.points[center]
    nbrs = g.neighbors(center)

    groups: dict[tuple[int, int], list[int]] = {}
    for i, q in enumerate(emb.points):
        if i == center:
            continue
        groups.setdefault(line_direction(p, q), []).append(i)

    lines = []
    for direction, members in groups.items():
        members.sort(key=lambda i: _signed_param(emb.points[i], p, direction))
        designated = []
        pos = [i for i in members if _signed_param(emb.points[i], p, direction) > 0]
        neg = [i for i in members if _signed_param(emb.points[i], p, direction) < 0]
        if pos:
            designated.append(pos[0])
        if neg:
            designated.append(neg[-1])
        for d in designated:
            if d not in nbrs:
                raise CoverageViolationError(
                    f"nearest point {d} on a center ray is not a neighbor of {center}")
        lines.append(StarLine(direction, tuple(members), tuple(designated)))

    if len(lines) > delta:
        raise CoverageViolationError(
            f"{len(lines)} lines exceed the minimum degree {delta}")
    covered = {center}
    for line in lines:
        covered.update(line.points)
    if covered != set(range(g.n)):
        raise CoverageViolationError("star lines do not cover all points")

    def cmp(a: StarLine, b: StarLine) -> int:
        cross = a.direction[0] * b.direction[1] - a.direction[1] * b.direction[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    lines.sort(key=cmp_to_key(cmp))
    return StarLines(center, tuple(lines))


def _pattern_selection(lines: tuple[StarLine, ...]) -> set[int]:
    """Designated neighbors on lines 4i-2, 4i-1 plus the tail per m mod 4."""
    m = len(lines)
    positions = set()
    for i in range(1, m // 4 + 1):
        positions.update((4 * i - 2, 4 * i - 1))
    rem = m % 4
    if rem == 1:
        positions.add(m)
    elif rem in (2, 3):
        positions.update((m - 1, m))
    return {lines[pos - 1].neighbors[0] for pos in positions}


def min_degree_dominating(emb: Embedding) -> DominatingWitness:
    """A verified dominating set of size <= floor(delta/2) + 1.

    Tries the adjacent-line selection pattern first, then greedy
    augmentation, then an exact search capped at the bound. Raises
    BoundViolationError only if no set within the bound exists at all,
    which would contradict the min-degree theorem.
    """
    sl = star_lines(emb)
    g = visibility_graph(emb)
    delta = min(g.degrees())
    bound = delta // 2 + 1
    masks = adjacency_masks(g)
    full = (1 << g.n) - 1

    selected = _pattern_selection(sl.lines)
    if len(selected) <= bound and is_dominating(g, selected):
        return DominatingWitness(frozenset(selected), True)

    log.info("line-pattern selection not dominating or over bound; falling back to greedy")
    augmented = set(selected) if len(selected) <= bound else set()
    covered = 0
    for v in augmented:
        covered |= masks[v] | (1 << v)
    while covered != full and len(augmented) < bound:
        best = max(range(g.n),
                   key=lambda v: (bin((masks[v] | (1 << v)) & ~covered).count("1"), -v))
        augmented.add(best)
        covered |= masks[best] | (1 << best)
    if covered == full and len(augmented) <= bound:
        return DominatingWitness(frozenset(augmented), True)

    log.info("greedy fallback exceeded the bound; running exact capped search")
    exact = dominating_set_of_size(g, bound)
    if exact is None:
        raise BoundViolationError(
            f"no dominating set of size {bound} = floor({delta}/2)+1 exists")
    assert is_dominating(g, exact)
    return DominatingWitness(frozenset(exact), True)
