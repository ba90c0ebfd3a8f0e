"""Visibility graphs of point sets and their structural properties."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DuplicatePointsError, NotNonPathError, SizeMismatchError
from .geometry import Point, convex_layers, point_on_open_segment
from .graphs import Graph, adjacency_masks


@dataclass(frozen=True)
class Embedding:
    """An ordered point set; index i corresponds to vertex i."""

    points: tuple[Point, ...]

    def __init__(self, points: Sequence[Point]):
        pts = tuple(points)
        if len(set(pts)) != len(pts):
            raise DuplicatePointsError("embedding points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


def visibility_graph(emb: Embedding) -> Graph:
    """Edge {i, j} iff no third point lies strictly between points i and j.

    Naive all-pairs, all-witnesses scan with exact predicates; quadratic in
    pairs, cubic overall, which is fine at the scales this toolkit targets.
    """
    pts = emb.points
    n = len(pts)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            a, b = pts[i], pts[j]
            if not any(k != i and k != j and point_on_open_segment(pts[k], a, b)
                       for k in range(n)):
                edges.add((i, j))
    return Graph(n, frozenset(edges))


def is_path_graph(g: Graph) -> Optional[list[int]]:
    """An end-to-end vertex order if g is a simple path, else None.

    Single vertices and the empty graph count as (degenerate) paths. The
    returned order starts at the lower-indexed endpoint.
    """
    n = g.n
    if n == 0:
        return []
    if n == 1:
        return [0] if not g.edges else None
    if len(g.edges) != n - 1:
        return None
    deg = g.degrees()
    ends = [v for v in range(n) if deg[v] == 1]
    if len(ends) != 2 or any(d not in (1, 2) for d in deg):
        return None
    masks = adjacency_masks(g)
    order = [min(ends)]
    seen = 1 << order[0]
    while len(order) < n:
        nxt = masks[order[-1]] & ~seen
        if nxt == 0:
            return None  # disconnected (path + cycle components)
        v = (nxt & -nxt).bit_length() - 1
        order.append(v)
        seen |= 1 << v
    return order


def diameter(g: Graph):
    """Maximum shortest-path length; ``math.inf`` if disconnected."""
    if g.n < 1:
        raise ValueError("diameter needs at least one vertex")
    masks = adjacency_masks(g)
    best = 0
    for src in range(g.n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            m = masks[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if len(dist) < g.n:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def realizes(emb: Embedding, g: Graph) -> bool:
    """True iff the visibility graph of emb equals g edge-for-edge."""
    if len(emb) != g.n:
        raise SizeMismatchError(f"embedding has {len(emb)} points, graph has {g.n} vertices")
    return visibility_graph(emb).edges == g.edges


def _is_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) != g.n or set(cycle) != set(range(g.n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def _splice_layers(layers: list[list[int]], g: Graph) -> Optional[list[int]]:
    """Best-effort outer-to-inner stitching of convex layers into a cycle."""
    cycle = list(layers[0])
    if not all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))):
        return None
    for layer in layers[1:]:
        spliced = None
        m = len(layer)
        for rot in range(m):
            for seq in (layer[rot:] + layer[:rot], list(reversed(layer[rot:] + layer[:rot]))):
                if m > 1 and not all(g.has_edge(seq[i], seq[i + 1]) for i in range(m - 1)):
                    continue
                for pos in range(len(cycle)):
                    a, b = cycle[pos], cycle[(pos + 1) % len(cycle)]
                    if g.has_edge(a, seq[0]) and g.has_edge(seq[-1], b):
                        spliced = cycle[:pos + 1] + seq + cycle[pos + 1:]
                        break
                if spliced:
                    break
            if spliced:
                break
        if spliced is None:
            return None
        cycle = spliced
    return cycle


def _backtrack_hamiltonian(g: Graph) -> Optional[list[int]]:
    n = g.n
    masks = adjacency_masks(g)
    full = (1 << n) - 1
    path = [0]

    def extend(visited: int) -> bool:
        if visited == full:
            return g.has_edge(path[-1], 0)
        last = path[-1]
        # Fail early if some unvisited vertex has no remaining way in or out.
        free = full & ~visited
        m = free
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            avail = masks[v] & (free | 1 | (1 << last))
            if avail == 0:
                return False
        cand = masks[last] & free
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            path.append(v)
            if extend(visited | (1 << v)):
                return True
            path.pop()
        return False

    return path[:] if extend(1) else None


def hamiltonian_cycle(emb: Embedding) -> list[int]:
    """A Hamiltonian cycle of visibility_graph(emb) as a vertex order.

    Strategy: stitch convex layers outermost to innermost; if the stitching
    heuristic fails, fall back to exhaustive backtracking (a non-path PVG
    always has a Hamiltonian cycle, so the fallback cannot fail on valid
    inputs). The result is verified against the graph before returning.

    Raises NotNonPathError when the visibility graph is a path.
    """
    g = visibility_graph(emb)
    if is_path_graph(g) is not None:
        raise NotNonPathError("visibility graph is a path; no Hamiltonian cycle sought")
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    layers = convex_layers(emb.points)
    cycle = _splice_layers(layers, g)
    if cycle is None or not _is_hamiltonian_cycle(g, cycle):
        cycle = _backtrack_hamiltonian(g)
    if cycle is None or not _is_hamiltonian_cycle(g, cycle):
        raise RuntimeError("no Hamiltonian cycle found; input is not a valid non-path PVG embedding")
    return cycle
