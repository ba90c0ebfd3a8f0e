"""Polynomial-time reductions onto point visibility graphs.

Each reduction maps a source decision-problem instance to an instance of
the same (or a related) problem on a PVG obtained through the blocker
transformation, recording provenance (blocker count, padding, presolve)
so that the equivalence harness can audit every step.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .blockers import add_universal, phi
from .graphs import Graph, complete_graph, empty_graph
from .solvers import solve_ffvd, solve_lip

PROBLEMS = ("FVS", "LIP", "BISECTION", "MAXCUT", "FFVD", "DOMSET")


@dataclass(frozen=True)
class Family:
    """A finite set of forbidden induced subgraphs."""

    members: tuple[Graph, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("family must be nonempty")
        if any(h.n < 1 for h in self.members):
            raise ValueError("family members need at least one vertex")


@dataclass(frozen=True)
class Instance:
    problem: str
    graph: Graph
    k: int
    family: Optional[Family] = None

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise ValueError(f"unknown problem tag {self.problem!r}")
        if (self.family is not None) != (self.problem == "FFVD"):
            raise ValueError("family must be present exactly for FFVD instances")
        if self.k < 0:
            raise ValueError("budget k must be non-negative")


@dataclass(frozen=True)
class Provenance:
    reduction: str
    blockers: int = 0
    universal_pad: int = 0
    ell: Optional[int] = None
    presolved: Optional[bool] = None


@dataclass(frozen=True)
class ReducedInstance:
    instance: Instance
    provenance: Provenance


def _trivial_lip(answer: bool) -> Instance:
    # K1 has exactly one induced path, with 0 edges.
    return Instance("LIP", complete_graph(1), 0 if answer else 1)


def _trivial_ffvd(answer: bool, family: Family) -> Instance:
    if answer:
        return Instance("FFVD", empty_graph(0), 0, family)
    # A family member is never F-free itself and the budget is 0.
    return Instance("FFVD", family.members[0], 0, family)


def reduce_fvs(g: Graph, k: int) -> ReducedInstance:
    """Feedback Vertex Set -> Feedback Vertex Set on a PVG.

    Target instance is (phi(g), k + |B|) where B is the blocker set.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    res = phi(g)
    b = len(res.blockers)
    return ReducedInstance(
        Instance("FVS", res.graph, k + b),
        Provenance("fvs", blockers=b),
    )


def reduce_lip(g: Graph, k: int) -> ReducedInstance:
    """Longest Induced Path -> Longest Induced Path on a PVG.

    For k <= 2 the instance is solved outright and a canonical trivial
    instance is returned with the answer recorded; for k >= 3 the target
    is (phi(g), k) with an unchanged budget (no blocker lies on an induced
    path with three or more edges).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k <= 2:
        answer = solve_lip(g, k).answer
        return ReducedInstance(
            _trivial_lip(answer),
            Provenance("lip", presolved=answer),
        )
    res = phi(g)
    return ReducedInstance(
        Instance("LIP", res.graph, k),
        Provenance("lip", blockers=len(res.blockers)),
    )


def reduce_bisection(g: Graph, k: int) -> ReducedInstance:
    """Max Cut -> Bisection on a PVG.

    Applies the blocker transformation to the complement, pads with
    universal vertices until the added set is at least as large as V and
    the total count is even, and sets k' = (|V'|/2)^2 - k.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    res = phi(g.complement())
    b = len(res.blockers)
    n = g.n
    if b < n:
        pad = n - b
    elif (b + n) % 2 == 1:
        pad = 1
    else:
        pad = 0
    graph = add_universal(res.graph, pad)
    assert graph.n % 2 == 0 and b + pad >= n
    k_prime = (graph.n // 2) ** 2 - k
    if k_prime < 0:
        # k exceeds the largest possible cut of any graph on |V'| vertices,
        # so the source is a no-instance; K2 at budget 0 is a canonical no.
        return ReducedInstance(
            Instance("BISECTION", complete_graph(2), 0),
            Provenance("bisection", blockers=b, universal_pad=pad, presolved=False),
        )
    return ReducedInstance(
        Instance("BISECTION", graph, k_prime),
        Provenance("bisection", blockers=b, universal_pad=pad),
    )


# ---------------------------------------------------------------------------
# F-free Vertex Deletion


def _universal_vertices(h: Graph) -> list[int]:
    return [v for v in range(h.n) if h.degree(v) == h.n - 1]


def _complete_orders(f: Family) -> list[int]:
    return sorted({h.n for h in f.members if h.is_complete()})


def _star_orders(f: Family) -> list[int]:
    """Leaf counts t' of members isomorphic to K_{1,t'} with t' >= 2."""
    out = set()
    for h in f.members:
        if h.n >= 3 and len(h.edges) == h.n - 1:
            deg = sorted(h.degrees())
            if deg[-1] == h.n - 1 and all(d == 1 for d in deg[:-1]):
                out.add(h.n - 1)
    return sorted(out)


def validate_family(f: Family) -> set[str]:
    """The subset of reduction cases {i, ii, iii} whose hypotheses f meets.

    All checks are exhaustive on the (small) members. A family containing
    the single-vertex complete graph is rejected outright: F-freeness
    would then only be attainable by deleting every vertex.
    """
    if any(h.n == 1 for h in f.members):
        raise ValueError("family must not contain the one-vertex graph")
    cases: set[str] = set()
    complete_orders = _complete_orders(f)
    if not complete_orders:
        cases.add("i")
    for t in complete_orders:
        if t < 3:
            continue
        km1 = [complete_graph(t - 1)]
        # Case ii: no member reaches K_{t-1}-freeness with fewer than two
        # vertex deletions.
        if all(not solve_ffvd(h, 1, km1).answer for h in f.members):
            cases.add("ii")
            break
    if (any(t >= 3 for t in complete_orders)
            and _star_orders(f)
            and all(h.edges for h in f.members)):
        cases.add("iii")
    return cases


def ramsey_threshold(t: int, t_prime: int) -> int:
    """A vertex count forcing a K_t or t' pairwise non-adjacent vertices.

    Exact classical values from a small table; otherwise the binomial
    upper bound C(t + t' - 2, t - 1), which is always valid and only
    enlarges the brute-force branch of the case-iii reduction.
    """
    if t < 2 or t_prime < 2:
        raise ValueError("Ramsey threshold needs t >= 2 and t' >= 2")
    if t == 2:
        return t_prime
    if t_prime == 2:
        return t
    table = {(3, 3): 6, (3, 4): 9, (4, 3): 9, (3, 5): 14, (5, 3): 14, (4, 4): 18}
    if (t, t_prime) in table:
        return table[(t, t_prime)]
    return comb(t + t_prime - 2, t - 1)


def strip_universal(f: Family) -> Family:
    """Remove every universal vertex from every member (case-i source family)."""
    stripped = []
    for h in f.members:
        keep = [v for v in range(h.n) if h.degree(v) < h.n - 1]
        stripped.append(h.induced(keep))
    return Family(tuple(stripped))


def reduce_ffvd(g: Graph, k: int, f: Family, case: str) -> ReducedInstance:
    """F-free Vertex Deletion -> F-free Vertex Deletion on a PVG.

    case i:   source is F'-free deletion (F' = members with universal
              vertices stripped); target graph is phi(g) plus k + ell
              universal vertices with the budget unchanged.
    case ii:  target (phi(g), k + |B|).
    case iii: if n < k + R(t, t'), solve by brute force and return a
              presolved trivial instance; otherwise (phi(g), k + |B|).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if case not in validate_family(f):
        raise ValueError(f"case {case!r} does not apply to this family")
    res = phi(g)
    b = len(res.blockers)
    if case == "i":
        ell = max(len(_universal_vertices(h)) for h in f.members)
        graph = add_universal(res.graph, k + ell)
        return ReducedInstance(
            Instance("FFVD", graph, k, f),
            Provenance("ffvd-i", blockers=b, universal_pad=k + ell, ell=ell),
        )
    if case == "ii":
        return ReducedInstance(
            Instance("FFVD", res.graph, k + b, f),
            Provenance("ffvd-ii", blockers=b),
        )
    # case iii
    t = min(x for x in _complete_orders(f) if x >= 3)
    t_prime = min(_star_orders(f))
    threshold = ramsey_threshold(t, t_prime)
    if g.n < k + threshold:
        answer = solve_ffvd(g, k, f.members).answer
        return ReducedInstance(
            _trivial_ffvd(answer, f),
            Provenance("ffvd-iii", presolved=answer),
        )
    return ReducedInstance(
        Instance("FFVD", res.graph, k + b, f),
        Provenance("ffvd-iii", blockers=b),
    )
