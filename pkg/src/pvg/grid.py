"""Grid point visibility graphs and dominating-set bounds.

Two lattice points see each other iff their absolute coordinate
differences are relatively prime, so grid PVGs are built directly from
gcd tests. f(n) denotes the minimum dominating-set size of the n x n
grid PVG.

Log convention: the classical bounds lower(n) = log n / (2 log log n) and
upper(n) = 4 log n are stated without a base in the literature; this
module uses NATURAL logarithms throughout. Both bounds are asymptotic;
only the upper bound is meaningful (and checked) at the small n this
toolkit can reach, while the lower expression is reported as-is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import Embedding
from .geometry import Point
from .graphs import Graph
from .solvers import DominatingWitness, Witness, dominating_set_of_size, greedy_dominating, is_dominating


@dataclass(frozen=True)
class GridSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("grid dimensions must be positive")


@dataclass(frozen=True)
class BoundRow:
    n: int
    f_n: int
    lower: float  # nan where the expression is undefined (n = 2)
    upper: float


def grid_visible(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """True iff |dx| and |dy| are relatively prime (gcd(0, a) = a)."""
    if p == q:
        raise ValueError("identical points have no visibility relation")
    return math.gcd(abs(p[0] - q[0]), abs(p[1] - q[1])) == 1


def grid_index(spec: GridSpec, x: int, y: int) -> int:
    """External index contract: (x, y) -> (x-1)*m + (y-1)."""
    return (x - 1) * spec.m + (y - 1)


def grid_points(spec: GridSpec) -> list[tuple[int, int]]:
    return [(x, y) for x in range(1, spec.n + 1) for y in range(1, spec.m + 1)]


def grid_pvg(spec: GridSpec) -> Graph:
    """The n x m grid PVG under the coprimality rule."""
    pts = grid_points(spec)
    edges = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if grid_visible(pts[i], pts[j]):
                edges.add((i, j))
    return Graph(len(pts), frozenset(edges))


def grid_embedding(spec: GridSpec) -> Embedding:
    """The literal lattice embedding, index-aligned with grid_pvg."""
    return Embedding([Point(x, y) for x, y in grid_points(spec)])


def abbott_upper(n: int) -> float:
    if n < 2:
        raise ValueError("upper bound needs n >= 2")
    return 4.0 * math.log(n)


def abbott_lower(n: int) -> float:
    """log n / (2 log log n); meaningless at tiny n (asymptotic only)."""
    if n < 3:
        raise ValueError("lower bound expression needs n >= 3 (log log n > 0)")
    return math.log(n) / (2.0 * math.log(math.log(n)))


def abbott_bounds(n: int) -> tuple[Optional[float], float]:
    """(lower, upper) under the natural-log convention; lower is None at n=2."""
    upper = abbott_upper(n)
    lower = abbott_lower(n) if n >= 3 else None
    return lower, upper


def _fundamental_domain(n: int) -> list[int]:
    # One representative octant of the square's symmetry group.
    spec = GridSpec(n, n)
    half = (n + 1) // 2
    return [grid_index(spec, x, y) for x in range(1, half + 1) for y in range(1, x + 1)]


def _lex_least_dominating(g: Graph, size: int) -> frozenset[int]:
    """Lexicographically least dominating set of the given (optimal) size."""
    chosen: list[int] = []
    for _ in range(size):
        start = chosen[-1] + 1 if chosen else 0
        for v in range(start, g.n):
            found = dominating_set_of_size(g, size, forced=chosen + [v], min_index=0)
            if found is not None:
                chosen.append(v)
                break
        else:  # pragma: no cover - cannot happen for a feasible size
            raise RuntimeError("lexicographic refinement failed")
        if is_dominating(g, chosen):
            break
    assert is_dominating(g, chosen)
    return frozenset(chosen)


def grid_min_dominating(n: int) -> DominatingWitness:
    """An exact minimum dominating set of the n x n grid PVG.

    Searches by increasing cardinality, pruned by the ceil(4 ln n) upper
    bound and by restricting the first selected point to a fundamental
    domain of the square's symmetries (any dominating set has a symmetric
    image meeting the domain). The reported set is the lexicographically
    least optimum.
    """
    if n < 1:
        raise ValueError("n must be positive")
    g = grid_pvg(GridSpec(n, n))
    if n == 1:
        return DominatingWitness(frozenset({0}), True)
    cap = len(greedy_dominating(g))
    if n >= 2:
        cap = min(cap, math.ceil(abbott_upper(n)))
    domain = _fundamental_domain(n)
    for size in range(1, cap + 1):
        for first in domain:
            if dominating_set_of_size(g, size, forced=(first,)) is not None:
                best = _lex_least_dominating(g, size)
                assert is_dominating(g, best)
                return DominatingWitness(best, True)
    raise RuntimeError("no dominating set within the upper-bound cap")  # pragma: no cover


def bounds_table(n_max: int) -> list[BoundRow]:
    """Rows (n, f(n), lower, upper) for n = 2..n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    for n in range(2, n_max + 1):
        f_n = len(grid_min_dominating(n).set)
        lower, upper = abbott_bounds(n)
        rows.append(BoundRow(n, f_n, math.nan if lower is None else lower, upper))
    return rows


def bounds_csv(rows: list[BoundRow]) -> str:
    """CSV with header n,f,lower,upper; six fractional digits on bounds."""
    lines = ["n,f,lower,upper"]
    for r in rows:
        lines.append(f"{r.n},{r.f_n},{r.lower:.6f},{r.upper:.6f}")
    return "\n".join(lines) + "\n"


def fpt_dominating(n: int, k: int, presolve_threshold: Optional[int] = None) -> Witness:
    """Dominating set of size <= k on the n x n grid PVG.

    When ``presolve_threshold`` is set and n >= threshold, budgets below
    the asymptotic lower bound are answered "no" without search. The
    default keeps the presolve disabled because the bound is only valid
    for sufficiently large n.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if (presolve_threshold is not None and n >= max(presolve_threshold, 3)
            and k < abbott_lower(n)):
        return Witness(False)
    g = grid_pvg(GridSpec(n, n))
    if k == 0:
        return Witness(False)
    found = dominating_set_of_size(g, min(k, g.n))
    if found is None:
        return Witness(False)
    return Witness(True, tuple(sorted(found)))
