"""Brute-force certificate search and verification, independent of the probe path.

Everything here is exhaustive search over small graphs: backtracking clique
search with bitmask intersection pruning, anchored chordless-cycle
enumeration for high odd holes, and direct structural recognition of the
7-vertex exceptional graph.  `verify_certificate` re-checks any certificate
from first principles and is the ground truth the rest of the system is
validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .graph import Graph, complement, max_degree


@dataclass(frozen=True)
class CliqueWitness:
    """A clique whose size equals the maximum degree of the host graph."""

    vertices: frozenset[int]


@dataclass(frozen=True)
class HighOddHoleWitness:
    """A chordless odd cycle (length >= 5) whose vertices all have degree >= max degree - 1."""

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ExceptionalC7Complement:
    """Identification of the complement of the 7-cycle.

    positions[v] is the place of vertex v along the complement-defining
    7-cycle; adjacency in the host graph holds iff the cyclic position
    distance is 2 or 3.
    """

    positions: tuple[int, ...]


Certificate = Union[CliqueWitness, HighOddHoleWitness, ExceptionalC7Complement]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


_ACCEPT = Verdict(True)


def find_clique(g: Graph, k: int) -> frozenset[int] | None:
    """Lexicographically least k-clique (as a vertex set), or None.

    Depth-first over ascending vertex ids with candidate-mask intersection;
    because subsets are explored in lexicographic order and pruning only
    discards infeasible branches, the first hit is the least witness.
    """
    if k < 1:
        raise ValueError("clique size must be at least 1")
    if k > g.n:
        return None

    def extend(chosen: list[int], cand: int, need: int) -> list[int] | None:
        if need == 0:
            return chosen
        while cand:
            if cand.bit_count() < need:
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = extend(chosen + [v], cand & g.adjacency_mask(v), need - 1)
            if found is not None:
                return found
        return None

    hit = extend([], (1 << g.n) - 1, k)
    return frozenset(hit) if hit is not None else None


def odd_holes(g: Graph, degree_floor: int = 0) -> Iterator[tuple[int, ...]]:
    """Enumerate chordless odd cycles of length >= 5 on vertices meeting the floor.

    Each cycle is anchored at its least vertex and reported once: paths grow
    from the anchor through ascending extensions that stay chordless, and a
    closure is emitted only when the second vertex id is below the last,
    killing the reflected traversal.
    """
    candidates = 0
    for v in range(g.n):
        if g.degree(v) >= degree_floor:
            candidates |= 1 << v

    def grow(path: list[int], path_mask: int, blocked: int) -> Iterator[tuple[int, ...]]:
        anchor = path[0]
        last = path[-1]
        allowed = (
            g.adjacency_mask(last)
            & candidates
            & ~path_mask
            & ~blocked
            & ~((1 << (anchor + 1)) - 1)
        )
        m = allowed
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if g.has_edge(w, anchor):
                length = len(path) + 1
                if length >= 5 and length % 2 == 1 and path[1] < w:
                    yield tuple(path) + (w,)
                continue
            yield from grow(path + [w], path_mask | low, blocked | g.adjacency_mask(last))

    for a in range(g.n):
        if not candidates >> a & 1:
            continue
        for u in g.neighbors(a):
            if u > a and candidates >> u & 1:
                yield from grow([a, u], (1 << a) | (1 << u), 0)


def find_high_odd_hole(g: Graph) -> tuple[int, ...] | None:
    """First chordless odd cycle >= 5 all of whose vertices have degree >= max degree - 1."""
    if g.n == 0:
        return None
    floor = max_degree(g) - 1
    for cycle in odd_holes(g, floor):
        return cycle
    return None


def is_c7_complement(g: Graph) -> tuple[int, ...] | None:
    """Positions of the vertices along the complement 7-cycle, or None.

    Succeeds iff g has 7 vertices, is 4-regular, and its complement is a
    single 7-cycle; the walk starts at vertex 0 and takes the lower-id
    neighbour first, so the map is deterministic.
    """
    if g.n != 7 or any(g.degree(v) != 4 for v in range(7)):
        return None
    comp = complement(g)
    if any(comp.degree(v) != 2 for v in range(7)):
        return None
    order = [0, comp.neighbors(0)[0]]
    while len(order) < 7:
        tail, prev = order[-1], order[-2]
        step = [u for u in comp.neighbors(tail) if u != prev]
        if len(step) != 1:
            return None
        if step[0] in order:
            return None
        order.append(step[0])
    if not comp.has_edge(order[-1], 0):
        return None
    positions = [0] * 7
    for pos, v in enumerate(order):
        positions[v] = pos
    return tuple(positions)


def _verify_clique(g: Graph, cert: CliqueWitness) -> Verdict:
    verts = sorted(cert.vertices)
    if any(not 0 <= v < g.n for v in verts):
        return Verdict(False, "vertex out of range")
    want = max_degree(g)
    if len(verts) != want:
        return Verdict(False, f"clique size {len(verts)} != max degree {want}")
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if not g.has_edge(u, w):
                return Verdict(False, f"adjacency violated: {u} !~ {w}")
    return _ACCEPT


def _verify_hole(g: Graph, cert: HighOddHoleWitness) -> Verdict:
    cycle = cert.cycle
    if any(not 0 <= v < g.n for v in cycle):
        return Verdict(False, "vertex out of range")
    if len(cycle) < 5:
        return Verdict(False, f"cycle length {len(cycle)} below 5")
    if len(set(cycle)) != len(cycle):
        return Verdict(False, "repeated vertex in cycle")
    k = len(cycle)
    for i in range(k):
        u, w = cycle[i], cycle[(i + 1) % k]
        if not g.has_edge(u, w):
            return Verdict(False, f"adjacency violated: {u} !~ {w}")
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(cycle[i], cycle[j]):
                return Verdict(False, f"chord present: {cycle[i]} ~ {cycle[j]}")
    if k % 2 == 0:
        return Verdict(False, "cycle length is even")
    floor = max_degree(g) - 1
    for v in cycle:
        if g.degree(v) < floor:
            return Verdict(False, f"degree below floor at {v}")
    return _ACCEPT


def _verify_c7(g: Graph, cert: ExceptionalC7Complement) -> Verdict:
    positions = cert.positions
    if g.n != 7:
        return Verdict(False, f"graph order {g.n} is not 7")
    if len(positions) != 7 or sorted(positions) != list(range(7)):
        return Verdict(False, "position map is not a bijection onto 0..6")
    for u in range(7):
        for w in range(u + 1, 7):
            d = abs(positions[u] - positions[w])
            d = min(d, 7 - d)
            if d in (2, 3):
                if not g.has_edge(u, w):
                    return Verdict(False, f"adjacency violated: {u} !~ {w}")
            elif g.has_edge(u, w):
                return Verdict(False, f"chord present: {u} ~ {w}")
    return _ACCEPT


def verify_certificate(g: Graph, cert: Certificate) -> Verdict:
    """Accept iff the certificate's defining conditions hold in g.

    Rejection reports the first violated condition, checked in the order:
    size, adjacency, chord, parity, degree floor.
    """
    if isinstance(cert, CliqueWitness):
        return _verify_clique(g, cert)
    if isinstance(cert, HighOddHoleWitness):
        return _verify_hole(g, cert)
    if isinstance(cert, ExceptionalC7Complement):
        return _verify_c7(g, cert)
    return Verdict(False, f"unknown certificate type {type(cert).__name__}")


def oracle_witness(g: Graph) -> Certificate | None:
    """Brute-force certificate: clique first, then high odd hole, then the exception."""
    if g.n == 0:
        return None
    delta = max_degree(g)
    if delta >= 1:
        clique = find_clique(g, delta)
        if clique is not None:
            return CliqueWitness(clique)
    hole = find_high_odd_hole(g)
    if hole is not None:
        return HighOddHoleWitness(hole)
    positions = is_c7_complement(g)
    if positions is not None:
        return ExceptionalC7Complement(positions)
    return None
