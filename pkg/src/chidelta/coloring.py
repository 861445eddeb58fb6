"""Exact vertex colouring, Kempe chains, and vertex-critical subgraph extraction.

The solver is exact branch-and-bound with saturation-degree ordering and a
deterministic branching rule, so every coloring it hands out is reproducible
for a fixed graph labeling.  Kempe machinery works on two-colour components
of a proper partial coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class Coloring:
    """Partial vertex coloring: colors 1..k, with 0 meaning uncoloured."""

    k: int
    colors: tuple[int, ...]

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def is_colored(self, v: int) -> bool:
        return self.colors[v] != 0

    def colored_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c)


@dataclass(frozen=True)
class KempeChain:
    """A maximal connected two-colour component containing `start`."""

    colors: tuple[int, int]
    start: int
    members: frozenset[int]


def is_proper(g: Graph, c: Coloring, on: Iterable[int] | None = None) -> bool:
    """True iff no edge inside `on` (default: all coloured vertices) is monochromatic."""
    verts = sorted(set(on)) if on is not None else list(c.colored_vertices())
    inside = set(verts)
    for v in verts:
        if not c.is_colored(v):
            raise ValueError(f"vertex {v} is uncoloured")
    for v in verts:
        cv = c.colors[v]
        for u in g.neighbors(v):
            if u in inside and c.colors[u] == cv:
                return False
    return True


def find_k_coloring(g: Graph, k: int, on: Iterable[int] | None = None) -> Coloring | None:
    """Proper coloring of exactly the vertices in `on` with <= k colors, or None.

    Branching picks the uncoloured vertex of maximum saturation (distinct
    colours among its coloured neighbours), ties broken by lowest id, and
    tries colours in ascending order allowing at most one fresh colour.
    """
    if k < 1:
        raise ValueError("palette size must be at least 1")
    verts = sorted(set(on)) if on is not None else list(range(g.n))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    colors = [0] * g.n

    def pick() -> int:
        best = -1
        best_sat = -1
        for v in verts:
            if colors[v]:
                continue
            sat = len({colors[u] for u in g.neighbors(v) if colors[u]})
            if sat > best_sat:
                best_sat = sat
                best = v
        return best

    def solve(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v = pick()
        forbidden = {colors[u] for u in g.neighbors(v)}
        for c in range(1, min(k, used + 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if solve(remaining - 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    if solve(len(verts), 0):
        return Coloring(k, tuple(colors))
    return None


def _greedy_clique(g: Graph) -> list[int]:
    # Lower bound for the exact search; deterministic but heuristic.
    if g.n == 0:
        return []
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    clique = [start]
    cand = g.adjacency_mask(start)
    while cand:
        best = -1
        best_score = -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            score = (g.adjacency_mask(v) & cand).bit_count()
            if score > best_score:
                best_score = score
                best = v
        clique.append(best)
        cand &= g.adjacency_mask(best)
    return clique


def _greedy_color_count(g: Graph) -> int:
    # Non-backtracking saturation-order coloring; upper bound only.
    colors = [0] * g.n
    for _ in range(g.n):
        best = -1
        best_sat = -1
        for v in range(g.n):
            if colors[v]:
                continue
            sat = len({colors[u] for u in g.neighbors(v) if colors[u]})
            if sat > best_sat:
                best_sat = sat
                best = v
        forbidden = {colors[u] for u in g.neighbors(best)}
        c = 1
        while c in forbidden:
            c += 1
        colors[best] = c
    return max(colors, default=0)


def chromatic_number(g: Graph) -> int:
    """Least k for which a proper k-coloring of all vertices exists (exact)."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph")
    if g.edge_count() == 0:
        return 1
    low = max(2, len(_greedy_clique(g)))
    high = _greedy_color_count(g)
    for k in range(low, high):
        if find_k_coloring(g, k) is not None:
            return k
    return high


def kempe_chain(g: Graph, c: Coloring, start: int, a: int, b: int) -> KempeChain:
    """Connected component of `start` in the subgraph induced by colours {a, b}."""
    if a == b:
        raise ValueError("chain colours must be distinct")
    if c.colors[start] not in (a, b):
        raise ValueError(f"start vertex {start} is not coloured {a} or {b}")
    members = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if u not in members and c.colors[u] in (a, b):
                    members.add(u)
                    nxt.append(u)
        frontier = nxt
    return KempeChain((a, b), start, frozenset(members))


def kempe_swap(c: Coloring, chain: KempeChain) -> Coloring:
    """Exchange the chain's two colours on its members; everything else unchanged."""
    a, b = chain.colors
    swapped = list(c.colors)
    for v in chain.members:
        if swapped[v] == a:
            swapped[v] = b
        elif swapped[v] == b:
            swapped[v] = a
    return Coloring(c.k, tuple(swapped))


def shortest_path_in_chain(
    g: Graph, chain: KempeChain, start: int, targets: Iterable[int]
) -> tuple[int, ...] | None:
    """Shortest path inside the chain from `start` to the nearest target.

    Breadth-first layers; each newly reached vertex records its lowest-id
    predecessor, and among targets in the first reachable layer the lowest id
    wins, so the returned path is deterministic.
    """
    if start not in chain.members:
        raise ValueError(f"start vertex {start} is not in the chain")
    goal = set(targets)
    if start in goal:
        return (start,)
    parent: dict[int, int] = {start: -1}
    frontier = [start]
    while frontier:
        discovered: dict[int, int] = {}
        for u in sorted(frontier):
            for w in g.neighbors(u):
                if w in chain.members and w not in parent and w not in discovered:
                    discovered[w] = u
        if not discovered:
            return None
        parent.update(discovered)
        hits = sorted(w for w in discovered if w in goal)
        if hits:
            path = [hits[0]]
            while path[-1] != start:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        frontier = list(discovered)
    return None


def extract_vertex_critical(g: Graph) -> frozenset[int]:
    """Vertex set of a vertex-critical subgraph with the same chromatic number.

    Deletes greedily in ascending vertex order, restarting the scan after
    each deletion, until every remaining vertex is chromatically necessary.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    target = chromatic_number(g)
    keep = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in keep:
            trial = [u for u in keep if u != v]
            if not trial:
                continue
            sub, _ = induced_subgraph(g, trial)
            if chromatic_number(sub) == target:
                keep = trial
                changed = True
                break
    return frozenset(keep)
