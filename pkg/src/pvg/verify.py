"""Empirical yes/no-equivalence harness for the reductions.

For every source instance (G, k) in scope, the source problem and the
reduced instance are both solved by the exact brute-force oracles and the
answers are compared. Answers are memoized per isomorphism class of the
source graph (both oracles and reductions commute with relabeling), but
every labeled graph and every budget in scope is individually checked
against the memo, so a report covers the full stated population.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Optional

import numpy as np

from .core import Embedding, is_path_graph
from .geometry import Point
from .graphs import Graph, path_graph, complete_graph, star_graph
from .reductions import (Family, reduce_bisection, reduce_fvs, reduce_ffvd,
                         reduce_lip, strip_universal)
from .solvers import max_cut, min_bisection, solve_bisection, solve_ffvd, solve_fvs, solve_lip

FFVD_FAMILIES: list[tuple[str, Family, str]] = [
    ("{K3}", Family((complete_graph(3),)), "ii"),
    ("{P3}", Family((path_graph(3),)), "i"),
    ("{K3,K_{1,2}}", Family((complete_graph(3), star_graph(2))), "iii"),
    ("{K4}", Family((complete_graph(4),)), "ii"),
]


# ---------------------------------------------------------------------------
# labeled-graph enumeration and canonical forms


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = _pairs(n)
    return Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def graph_to_mask(g: Graph) -> int:
    index = {p: i for i, p in enumerate(_pairs(g.n))}
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def _perm_bit_maps(n: int) -> list[list[int]]:
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    return maps


_canon_tables: dict[int, np.ndarray] = {}


def _canon_table_n6() -> np.ndarray:
    # Vectorized min-over-permutations for all 2^15 labeled 6-vertex graphs.
    if 6 not in _canon_tables:
        masks = np.arange(1 << 15, dtype=np.int64)
        canon = masks.copy()
        for bit_map in _perm_bit_maps(6):
            permuted = np.zeros_like(masks)
            for i, tgt in enumerate(bit_map):
                permuted |= ((masks >> i) & 1) << tgt
            np.minimum(canon, permuted, out=canon)
        _canon_tables[6] = canon
    return _canon_tables[6]


def canonical_mask(n: int, mask: int) -> int:
    """Lexicographically least edge mask over all vertex relabelings."""
    if n <= 1:
        return mask
    if n == 6:
        return int(_canon_table_n6()[mask])
    if n <= 5:
        best = mask
        for bit_map in _perm_bit_maps(n):
            permuted = 0
            for i, tgt in enumerate(bit_map):
                if mask >> i & 1:
                    permuted |= 1 << tgt
            best = min(best, permuted)
        return best
    return mask  # n >= 7: sampled mode, no canonicalization


# ---------------------------------------------------------------------------
# seeded generators


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> Graph:
    if p is None:
        p = rng.uniform(0.15, 0.85)
    edges = {pair for pair in _pairs(n) if rng.random() < p}
    return Graph(n, frozenset(edges))


def random_embedding(rng: random.Random, n: int) -> Embedding:
    """A non-path embedding of n distinct points with rational coordinates."""
    while True:
        pts: set[Point] = set()
        while len(pts) < n:
            x = Fraction(rng.randrange(0, 4 * n), rng.choice((1, 1, 1, 2, 3)))
            y = Fraction(rng.randrange(0, 4 * n), rng.choice((1, 1, 1, 2, 3)))
            pts.add(Point(x, y))
        emb = Embedding(sorted(pts, key=lambda p: (p.x, p.y)))
        from .core import visibility_graph
        if is_path_graph(visibility_graph(emb)) is None:
            return emb


# ---------------------------------------------------------------------------
# per-problem equivalence checks


def _graphs_in_scope(nmax: int, samples: Optional[int], seed: int):
    """Yields (n, mask, graph); exhaustive up to n=6, seeded samples beyond."""
    for n in range(1, min(nmax, 6) + 1):
        for mask in range(1 << comb(n, 2)):
            yield n, mask, mask_to_graph(n, mask)
    rng = random.Random(seed)
    for n in range(7, nmax + 1):
        if not samples:
            raise ValueError("nmax >= 7 requires a sample count")
        for _ in range(samples):
            mask = rng.getrandbits(comb(n, 2))
            yield n, mask, mask_to_graph(n, mask)


def _solve_reduced(red, family: Optional[Family] = None) -> bool:
    inst = red.instance
    if inst.problem == "FVS":
        return solve_fvs(inst.graph, inst.k).answer
    if inst.problem == "LIP":
        return solve_lip(inst.graph, inst.k).answer
    if inst.problem == "BISECTION":
        return solve_bisection(inst.graph, inst.k).answer
    if inst.problem == "FFVD":
        return solve_ffvd(inst.graph, inst.k, inst.family.members).answer
    raise ValueError(inst.problem)


def verify_reduction(problem: str, nmax: int,
                     samples: Optional[int] = None, seed: int = 0) -> dict:
    """Check 100% oracle agreement for one reduction over the graph scope.

    Returns a report dict with counts, mismatches, and agreement rate.
    """
    problem = problem.lower()
    if problem == "ffvd":
        return _verify_ffvd(nmax, samples or 40, seed)
    if problem not in ("fvs", "lip", "bisection"):
        raise ValueError(f"unknown reduction {problem!r}")

    cache: dict[tuple, tuple[bool, bool]] = {}
    bis_cache: dict[tuple, tuple[int, int, Graph]] = {}
    graphs = pairs = agreements = 0
    mismatches: list[dict] = []

    for n, mask, g in _graphs_in_scope(nmax, samples, seed):
        graphs += 1
        canon = canonical_mask(n, mask)
        if problem == "bisection":
            k_range = range(0, len(g.edges) + 2)
        else:
            k_range = range(0, n + 1)
        for k in k_range:
            key = (n, canon, k)
            if key not in cache:
                cache[key] = _compare_one(problem, g, k, bis_cache, (n, canon))
            src, tgt = cache[key]
            pairs += 1
            if src == tgt:
                agreements += 1
            else:
                mismatches.append({"n": n, "edges": sorted(g.edges), "k": k,
                                   "source": src, "reduced": tgt})
    return _report(problem, nmax, samples, seed, graphs, pairs, agreements, mismatches)


def _compare_one(problem: str, g: Graph, k: int, bis_cache, class_key) -> tuple[bool, bool]:
    n = g.n
    if problem == "fvs":
        red = reduce_fvs(g, k)
        assert red.provenance.blockers == comb(n, 2) - len(g.edges)
        assert red.instance.graph.n <= n + comb(n, 2)
        return solve_fvs(g, k).answer, _solve_reduced(red)
    if problem == "lip":
        red = reduce_lip(g, k)
        src = solve_lip(g, k).answer
        tgt = _solve_reduced(red)
        if red.provenance.presolved is not None:
            assert tgt == red.provenance.presolved
        return src, tgt
    # bisection (Max Cut source); optimum values are cached per class since
    # the reduced graph does not depend on k.
    if class_key not in bis_cache:
        red0 = reduce_bisection(g, 0)
        assert red0.provenance.blockers == comb(n, 2) - len(g.complement().edges)
        bis_cache[class_key] = (max_cut(g)[0], min_bisection(red0.instance.graph)[0],
                                red0.instance.graph)
    mc, minbis, graph0 = bis_cache[class_key]
    src = k <= mc
    red = reduce_bisection(g, k)
    if red.provenance.presolved is not None:
        tgt = _solve_reduced(red)
    else:
        assert red.instance.graph == graph0
        tgt = minbis <= red.instance.k
    return src, tgt


def _verify_ffvd(nmax: int, samples: int, seed: int) -> dict:
    rng = random.Random(seed)
    graphs = pairs = agreements = 0
    mismatches: list[dict] = []
    cache: dict[tuple, tuple[bool, bool]] = {}

    scope: list[tuple[int, int, Graph]] = []
    for n in range(1, min(nmax, 4) + 1):
        for mask in range(1 << comb(n, 2)):
            scope.append((n, mask, mask_to_graph(n, mask)))
    for n in range(5, nmax + 1):
        for _ in range(samples):
            mask = rng.getrandbits(comb(n, 2))
            scope.append((n, mask, mask_to_graph(n, mask)))

    for n, mask, g in scope:
        graphs += 1
        canon = canonical_mask(n, mask)
        for name, family, case in FFVD_FAMILIES:
            source_members = (strip_universal(family).members if case == "i"
                              else family.members)
            for k in range(0, 4):
                key = (name, n, canon, k)
                if key not in cache:
                    red = reduce_ffvd(g, k, family, case)
                    src = solve_ffvd(g, k, source_members).answer
                    tgt = _solve_reduced(red)
                    if red.provenance.presolved is not None:
                        assert tgt == red.provenance.presolved
                    cache[key] = (src, tgt)
                src, tgt = cache[key]
                pairs += 1
                if src == tgt:
                    agreements += 1
                else:
                    mismatches.append({"n": n, "edges": sorted(g.edges), "k": k,
                                       "family": name, "case": case,
                                       "source": src, "reduced": tgt})
    return _report("ffvd", nmax, samples, seed, graphs, pairs, agreements, mismatches)


def _report(problem, nmax, samples, seed, graphs, pairs, agreements, mismatches) -> dict:
    return {
        "problem": problem,
        "nmax": nmax,
        "samples": samples,
        "seed": seed,
        "graphs_checked": graphs,
        "pairs_checked": pairs,
        "agreements": agreements,
        "agreement": agreements / pairs if pairs else 1.0,
        "mismatches": mismatches,
    }
