"""Constructive certificate search for connected graphs with chromatic number
equal to maximum degree.

The search mirrors a Kempe-chain argument: colour the graph minus one vertex
with one colour fewer than the chromatic number, probe pairs of neighbours
whose colours are unique in that neighbourhood, and either certify adjacency
or close a chordless odd cycle through the uncoloured vertex.  Sweeping these
probes over a vertex-critical subgraph yields a maximum-degree clique or a
high odd hole on every valid input except the complement of the 7-cycle,
which is recognised explicitly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from .coloring import (
    Coloring,
    chromatic_number,
    extract_vertex_critical,
    find_k_coloring,
    kempe_chain,
    shortest_path_in_chain,
)
from .graph import Graph, induced_subgraph, is_connected, max_degree, min_degree
from .oracle import (
    Certificate,
    CliqueWitness,
    ExceptionalC7Complement,
    HighOddHoleWitness,
    find_clique,
    is_c7_complement,
    odd_holes,
    oracle_witness,
    verify_certificate,
)

log = logging.getLogger(__name__)


class ContractError(ValueError):
    """An input violated a precondition of the certificate search."""


@dataclass(frozen=True)
class Adjacent:
    """Probe outcome: the two probed vertices are adjacent."""

    u: int
    w: int


@dataclass(frozen=True)
class Hole:
    """Probe outcome: a verified high-odd-hole certificate was closed."""

    certificate: HighOddHoleWitness


@dataclass(frozen=True)
class Inconsistent:
    """Probe outcome: the instance contradicts its claimed chromatic number."""

    reason: str


ProbeOutcome = Union[Adjacent, Hole, Inconsistent]


@dataclass(frozen=True)
class NeighborhoodSplit:
    """Partition of N(center) into the non-adjacent pair A and the clique B.

    A carries the one duplicated colour of a (max degree - 1)-coloring of the
    graph minus `center`; B is everything else, certified pairwise adjacent
    with every member attached to at least one vertex of A.
    """

    center: int
    a: tuple[int, int]
    b: frozenset[int]


@dataclass(frozen=True)
class PathQuad:
    """Four neighbours of a centre inducing exactly the path a1-b1-b2-a2."""

    a1: int
    b1: int
    b2: int
    a2: int


@dataclass(frozen=True)
class SquaredCycleLabeling:
    """Bijection vertex -> cyclic position with adjacency iff distance <= 2."""

    n: int
    position: tuple[int, ...]

    def vertex_at(self) -> tuple[int, ...]:
        inverse = [0] * self.n
        for v, p in enumerate(self.position):
            inverse[p] = v
        return tuple(inverse)


@dataclass(frozen=True)
class ConflictReport:
    """A forced monochromatic edge witnessing that no 3-coloring exists.

    `forced` replays the propagation: positions 0,1,2 seed colours 1,2,3 and
    every later position is determined by the triangle with its two
    predecessors; `edge` is the first wrap-around edge whose endpoints were
    forced to the same colour.
    """

    n: int
    edge: tuple[int, int]
    color: int
    forced: tuple[int, ...]


def _ensure_verified(g: Graph, cert: Certificate, context: str) -> Certificate:
    verdict = verify_certificate(g, cert)
    if not verdict:
        raise ContractError(f"{context}: certificate failed verification: {verdict.reason}")
    return cert


def kempe_adjacency_probe(
    h: Graph, x: int, y: int, z: int, phi: Coloring
) -> ProbeOutcome:
    """Probe two uniquely-coloured neighbours of the uncoloured vertex x.

    If y ~ z the pair is reported adjacent.  Otherwise walk the maximal
    two-colour component of (phi(y), phi(z)) starting at y: if z is missing,
    swapping the component would free phi(y) at x and extend the coloring, so
    the claimed chromatic number was wrong (Inconsistent).  If z is present,
    the shortest alternating path from y to z closes through x into a cycle
    that is odd (the path ends in different colours, so it has evenly many
    vertices) and chordless (a chord would shortcut the shortest path, and x
    has no other neighbour coloured phi(y) or phi(z)).  The cycle is
    re-verified before being returned.
    """
    uncolored = [v for v in range(h.n) if not phi.is_colored(v)]
    if uncolored != [x]:
        raise ContractError(f"expected exactly vertex {x} uncoloured, got {uncolored}")
    if not (h.has_edge(x, y) and h.has_edge(x, z)):
        raise ContractError(f"{y} and {z} must both be neighbours of {x}")
    cy, cz = phi.color_of(y), phi.color_of(z)
    if cy == cz:
        raise ContractError(f"probed vertices share colour {cy}")
    for u in h.neighbors(x):
        if u not in (y, z) and phi.color_of(u) in (cy, cz):
            raise ContractError(
                f"colour {phi.color_of(u)} reappears on neighbour {u} of {x}"
            )
    if h.has_edge(y, z):
        return Adjacent(y, z)
    chain = kempe_chain(h, phi, y, cy, cz)
    if z not in chain.members:
        return Inconsistent(
            f"swap on the ({cy},{cz})-component of {y} would extend the coloring to {x}"
        )
    path = shortest_path_in_chain(h, chain, y, {z})
    cert = HighOddHoleWitness(tuple(path) + (x,))
    _ensure_verified(h, cert, "kempe_adjacency_probe")
    return Hole(cert)


def degree_deficient_probe(h: Graph, v: int) -> Certificate:
    """Certificate at a vertex of degree one below the maximum.

    Colours h - v with max_degree(h) - 1 colours; since the coloring cannot
    extend to v, the neighbours of v carry all colours exactly once, so every
    neighbour pair qualifies for the adjacency probe.  The first hole wins;
    if all pairs are adjacent, the closed neighbourhood is a clique of size
    max_degree(h).
    """
    delta = max_degree(h)
    if h.degree(v) != delta - 1:
        raise ContractError(f"vertex {v} has degree {h.degree(v)}, expected {delta - 1}")
    others = [u for u in range(h.n) if u != v]
    phi = find_k_coloring(h, delta - 1, others)
    if phi is None:
        raise ContractError(
            f"graph minus {v} admits no ({delta - 1})-coloring; input is not critical"
        )
    nbrs = h.neighbors(v)
    if len({phi.color_of(u) for u in nbrs}) != len(nbrs):
        raise ContractError(
            f"coloring extends to {v}; the claimed chromatic number is too high"
        )
    for i, y in enumerate(nbrs):
        for z in nbrs[i + 1:]:
            outcome = kempe_adjacency_probe(h, v, y, z, phi)
            if isinstance(outcome, Hole):
                return outcome.certificate
            if isinstance(outcome, Inconsistent):
                raise ContractError(f"probe at ({y},{z}) around {v}: {outcome.reason}")
    cert = CliqueWitness(frozenset(nbrs) | {v})
    return _ensure_verified(h, cert, "degree_deficient_probe")


def _structural_split(g: Graph, v: int) -> NeighborhoodSplit | Inconsistent:
    # Exhaustive fallback for inputs that are not vertex-critical (no coloring
    # of g - v exists to probe): try every candidate pair directly.
    nbrs = g.neighbors(v)
    for i, a1 in enumerate(nbrs):
        for a2 in nbrs[i + 1:]:
            if g.has_edge(a1, a2):
                continue
            b_set = [u for u in nbrs if u not in (a1, a2)]
            if any(
                not g.has_edge(x, y) for k, x in enumerate(b_set) for y in b_set[k + 1:]
            ):
                continue
            if all(g.has_edge(b, a1) or g.has_edge(b, a2) for b in b_set):
                return NeighborhoodSplit(v, (a1, a2), frozenset(b_set))
    return Inconsistent(f"no valid neighbourhood split exists at {v}")


def neighborhood_split(
    g: Graph, v: int
) -> NeighborhoodSplit | Certificate | Inconsistent:
    """Split N(v) of a regular graph into the duplicated-colour pair and a clique.

    Colours g - v with one colour fewer than the degree.  Exactly one colour
    must repeat among the neighbours (pigeonhole, provided every colour shows
    up); the repeated pair A is non-adjacent by properness.  Pairs inside
    B = N(v) - A are certified adjacent by the Kempe probe, and each B-vertex
    is attached to A via its two-colour component towards A: a single-edge
    path certifies attachment, a longer path closes an odd hole through v,
    and a missing path means the coloring could be rearranged to extend,
    which is Inconsistent.

    When g - v cannot be coloured at all (the instance is not vertex-critical,
    e.g. a squared cycle on 2 mod 3 vertices), the split is instead derived by
    exhaustively checking candidate pairs against the three conditions, which
    keeps the operation total on all squared cycles.
    """
    delta = max_degree(g)
    if delta < 4:
        raise ContractError(f"maximum degree {delta} below 4")
    if min_degree(g) != delta:
        raise ContractError("graph is not regular")
    others = [u for u in range(g.n) if u != v]
    phi = find_k_coloring(g, delta - 1, others)
    if phi is None:
        return _structural_split(g, v)
    by_color: dict[int, list[int]] = {}
    for u in g.neighbors(v):
        by_color.setdefault(phi.color_of(u), []).append(u)
    if len(by_color) < delta - 1:
        missing = sorted(set(range(1, delta)) - set(by_color))
        return Inconsistent(
            f"colour {missing[0]} is unused around {v}; the coloring extends"
        )
    duplicated = [c for c, verts in by_color.items() if len(verts) == 2]
    a_pair = tuple(sorted(by_color[duplicated[0]]))
    dup_color = duplicated[0]
    b_set = sorted(u for u in g.neighbors(v) if u not in a_pair)
    for i, y in enumerate(b_set):
        for z in b_set[i + 1:]:
            outcome = kempe_adjacency_probe(g, v, y, z, phi)
            if isinstance(outcome, Hole):
                return outcome.certificate
            if isinstance(outcome, Inconsistent):
                return outcome
    for b in sorted(b_set, key=phi.color_of):
        chain = kempe_chain(g, phi, b, dup_color, phi.color_of(b))
        path = shortest_path_in_chain(g, chain, b, set(a_pair))
        if path is None:
            return Inconsistent(
                f"component of {b} misses both of {a_pair}; the coloring extends"
            )
        if len(path) > 2:
            cert = HighOddHoleWitness(tuple(path) + (v,))
            _ensure_verified(g, cert, "neighborhood_split")
            return cert
    return NeighborhoodSplit(v, (a_pair[0], a_pair[1]), frozenset(b_set))


def split_attachment_check(
    g: Graph, split: NeighborhoodSplit, a: int
) -> int | Certificate | Inconsistent:
    """Count how many B-vertices the A-vertex `a` is attached to.

    Full attachment closes a clique of size max_degree on B + {a, center};
    the only other value a valid instance allows is |B| - 1, returned as the
    count.  Anything else means an earlier probe should have fired.
    """
    if a not in split.a:
        raise ContractError(f"vertex {a} is not in the split's A pair")
    count = (g.adjacency_mask(a) & _mask(split.b)).bit_count()
    delta = max_degree(g)
    if count == delta - 2:
        cert = CliqueWitness(split.b | {a, split.center})
        return _ensure_verified(g, cert, "split_attachment_check")
    if count == delta - 3:
        return count
    return Inconsistent(
        f"vertex {a} has {count} neighbours in B, expected {delta - 3} or {delta - 2}"
    )


def _mask(verts) -> int:
    m = 0
    for v in verts:
        m |= 1 << v
    return m


def path_quad(g: Graph, split: NeighborhoodSplit) -> PathQuad | Inconsistent:
    """The induced 4-path a1-b1-b2-a2 among the centre's neighbours.

    b2 is the unique B-vertex missed by a1 and b1 the unique one missed by
    a2; together with A's non-adjacency and B's cliqueness the four vertices
    induce exactly a path.  Every condition is re-checked.
    """
    a1, a2 = split.a
    missed1 = sorted(split.b - set(g.neighbors(a1)))
    missed2 = sorted(split.b - set(g.neighbors(a2)))
    if len(missed1) != 1 or len(missed2) != 1:
        return Inconsistent(
            f"A-vertices miss {len(missed1)} and {len(missed2)} B-vertices, expected 1 and 1"
        )
    b2, b1 = missed1[0], missed2[0]
    if b1 == b2:
        return Inconsistent(f"vertex {b1} is attached to neither A-vertex")
    quad = (a1, b1, b2, a2)
    want = {(a1, b1), (b1, b2), (b2, a2)}
    for i in range(4):
        for j in range(i + 1, 4):
            u, w = quad[i], quad[j]
            present = g.has_edge(u, w)
            expected = (u, w) in want or (w, u) in want
            if present != expected:
                return Inconsistent(
                    f"induced structure on {quad} is not the expected path"
                )
    return PathQuad(a1, b1, b2, a2)


def _quad_at(
    g: Graph, v: int
) -> PathQuad | Certificate | Inconsistent:
    split = neighborhood_split(g, v)
    if isinstance(split, Inconsistent):
        # The tracer also serves instances whose chromatic number is below the
        # degree, where probe colorings are unusable; structure decides there.
        split = _structural_split(g, v)
    if not isinstance(split, NeighborhoodSplit):
        return split
    for a in split.a:
        res = split_attachment_check(g, split, a)
        if not isinstance(res, int):
            return res
    return path_quad(g, split)


def trace_squared_cycle(
    g: Graph,
) -> SquaredCycleLabeling | Certificate | Inconsistent:
    """Label a 4-regular graph as the square of a cycle, or fail trying.

    Seeds positions ..a2, b2, v, b1, a1.. from the 4-path around vertex 0,
    then repeatedly takes the quad at the newest A-endpoint: its known end
    must match the two previously placed vertices, and the other end places
    two more vertices.  Any probe may short-circuit with a certificate.  On
    completion the labeling is verified: adjacency iff cyclic position
    distance is 1 or 2.
    """
    if g.n == 0 or not is_connected(g):
        raise ContractError("graph must be connected and nonempty")
    if max_degree(g) != 4 or min_degree(g) != 4:
        raise ContractError("graph is not 4-regular")
    n = g.n
    quad = _quad_at(g, 0)
    if not isinstance(quad, PathQuad):
        return quad
    position = {quad.a2: (n - 2) % n, quad.b2: (n - 1) % n, 0: 0, quad.b1: 1, quad.a1: 2}
    if len(position) != 5:
        return Inconsistent("seed quad vertices are not distinct")
    prev2, prev1, frontier, q = 0, quad.b1, quad.a1, 2
    while len(position) < n:
        step = _quad_at(g, frontier)
        if not isinstance(step, PathQuad):
            return step
        if step.a1 == prev2 and step.b1 == prev1:
            nxt1, nxt2 = step.b2, step.a2
        elif step.a2 == prev2 and step.b2 == prev1:
            nxt1, nxt2 = step.b1, step.a1
        else:
            return Inconsistent(
                f"quad at {frontier} does not extend positions {q - 2},{q - 1}"
            )
        for vert, pos in ((nxt1, (q + 1) % n), (nxt2, (q + 2) % n)):
            if vert in position:
                if position[vert] != pos:
                    return Inconsistent(
                        f"vertex {vert} re-placed at {pos}, already at {position[vert]}"
                    )
            else:
                position[vert] = pos
        prev2, prev1, frontier, q = frontier, nxt1, nxt2, q + 2
        if q > 2 * n:
            return Inconsistent("tracing ran past the cycle without closing")
    placed = tuple(position[v] for v in range(n))
    if sorted(placed) != list(range(n)):
        return Inconsistent("position labeling is not a bijection")
    for u in range(n):
        for w in range(u + 1, n):
            d = abs(placed[u] - placed[w])
            d = min(d, n - d)
            if g.has_edge(u, w) != (d in (1, 2)):
                return Inconsistent(
                    f"adjacency between {u} and {w} disagrees with position distance {d}"
                )
    return SquaredCycleLabeling(n, placed)


def squared_cycle_hole(n: int) -> tuple[int, ...]:
    """Chordless odd cycle of length >= 5 in the square of an n-cycle, as positions.

    Steps advance clockwise by 2 (a distance-2 edge) or 1 (a distance-1
    edge).  No two unit steps are ever adjacent, so any two chosen positions
    that are not consecutive on the hole are separated by at least 1+2 = 3 on
    both arcs, which rules out chords.

    For n = 3k+1 (k >= 3): start at position 1, alternate double step then
    unit step k-3 times each (reaching 3k-8), then five double steps wrap
    back to the start; the length is 2k-1.

    For n = 3k+2: take the least odd length l with 5 <= l, n/2 <= l <= 2n/3.
    That window always contains an odd integer for n >= 8, and using
    j = 2l-n unit steps with m = n-l double steps (note j <= m) covers the
    cycle exactly once; the excess m-j double steps go first, then double
    and unit steps alternate.
    """
    if n % 3 == 0:
        raise ValueError(f"n={n} is divisible by 3; the squared cycle is 3-colorable")
    if n % 3 == 1:
        if n < 10:
            raise ValueError(f"n={n} has no such cycle (the 7-vertex case is exceptional)")
        k = (n - 1) // 3
        seq = [1]
        pos = 1
        for _ in range(k - 3):
            pos += 2
            seq.append(pos)
            pos += 1
            seq.append(pos)
        for _ in range(4):
            pos += 2
            seq.append(pos)
        return tuple(seq)
    if n < 8:
        raise ValueError(f"n={n} is too small for an odd hole in the squared cycle")
    length = max(5, (n + 1) // 2)
    if length % 2 == 0:
        length += 1
    if 3 * length > 2 * n:
        raise ValueError(f"no odd cycle length fits the window for n={n}")
    unit = 2 * length - n
    double = n - length
    steps = [2] * (double - unit) + [2, 1] * unit
    seq = [0]
    pos = 0
    for s in steps[:-1]:
        pos += s
        seq.append(pos % n)
    return tuple(seq)


def sequence_three_coloring(n: int) -> Coloring:
    """Proper 3-coloring of the squared n-cycle for n divisible by 3."""
    if n % 3 != 0 or n < 6:
        raise ValueError(f"n={n} must be a multiple of 3, at least 6")
    return Coloring(3, tuple(p % 3 + 1 for p in range(n)))


def forced_coloring_conflict(n: int) -> ConflictReport:
    """Forced monochromatic edge showing the squared n-cycle has no 3-coloring.

    Seeds colours 1, 2, 3 on positions 0, 1, 2 (forced up to renaming, since
    they form a triangle) and propagates: every later position completes a
    triangle with its two predecessors, so its colour is determined.  When n
    is not a multiple of 3 the pattern cannot close, and one of the wrap
    edges comes back monochromatic; that edge is reported.
    """
    if n < 7:
        raise ValueError(f"n={n} too small")
    if n % 3 == 0:
        raise ValueError(f"n={n} is divisible by 3; no conflict exists")
    forced = [0] * n
    forced[0], forced[1], forced[2] = 1, 2, 3
    for p in range(3, n):
        forced[p] = 6 - forced[p - 1] - forced[p - 2]
    for u, w in ((n - 2, 0), (n - 1, 0), (n - 1, 1)):
        if forced[u] == forced[w]:
            return ConflictReport(n, (u, w), forced[u], tuple(forced))
    raise AssertionError(f"propagation closed without conflict at n={n}")


def _shortest_odd_hole(g: Graph) -> tuple[int, ...] | None:
    best: tuple[int, ...] | None = None
    for cycle in odd_holes(g, 2):
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


def _lift(cert: Certificate, new_to_old: list[int]) -> Certificate:
    if isinstance(cert, CliqueWitness):
        return CliqueWitness(frozenset(new_to_old[v] for v in cert.vertices))
    if isinstance(cert, HighOddHoleWitness):
        return HighOddHoleWitness(tuple(new_to_old[v] for v in cert.cycle))
    raise ContractError(f"cannot relabel certificate of type {type(cert).__name__}")


def find_witness(g: Graph) -> Certificate:
    """Certificate for a connected graph whose chromatic number equals its
    maximum degree: a clique of that size, a high odd hole, or identification
    of the complement of the 7-cycle.

    Dispatch: degree 2 yields an edge; degree 3 yields a triangle or the
    shortest odd cycle (chordless, since a chord would split off a shorter
    odd cycle, and triangle-free rules out length 3).  For degree >= 4 the
    search moves to a vertex-critical subgraph: if its maximum degree drops
    it must be complete; otherwise vertices of deficient degree are probed
    directly, and a regular critical subgraph (necessarily the whole graph)
    gets the full neighbourhood-split sweep, finishing with the squared-cycle
    endgame when the sweep stays silent.
    """
    if g.n == 0:
        raise ContractError("empty graph")
    if not is_connected(g):
        raise ContractError("input graph is disconnected")
    delta = max_degree(g)
    chi = chromatic_number(g)
    if chi != delta:
        raise ContractError(f"chromatic number {chi} != max degree {delta}")
    if delta <= 1:
        raise ContractError(f"degenerate instance with max degree {delta}")
    if delta == 2:
        cert = CliqueWitness(find_clique(g, 2))
        return _ensure_verified(g, cert, "find_witness")
    if delta == 3:
        triangle = find_clique(g, 3)
        if triangle is not None:
            return _ensure_verified(g, CliqueWitness(triangle), "find_witness")
        cycle = _shortest_odd_hole(g)
        if cycle is None:
            raise ContractError("triangle-free 3-chromatic graph has no odd cycle")
        return _ensure_verified(g, HighOddHoleWitness(cycle), "find_witness")

    keep = sorted(extract_vertex_critical(g))
    sub, _ = induced_subgraph(g, keep)
    sub_delta = max_degree(sub)
    if sub_delta == delta - 1:
        size = delta * (delta - 1) // 2
        if sub.n != delta or sub.edge_count() != size:
            raise ContractError(
                "critical subgraph with reduced maximum degree is not complete"
            )
        return _ensure_verified(g, CliqueWitness(frozenset(keep)), "find_witness")
    if sub_delta != delta:
        raise ContractError(
            f"critical subgraph has maximum degree {sub_delta}, expected {delta} or {delta - 1}"
        )
    deficient = [v for v in range(sub.n) if sub.degree(v) == delta - 1]
    if deficient:
        cert = degree_deficient_probe(sub, deficient[0])
        return _ensure_verified(g, _lift(cert, keep), "find_witness")
    if sub.n != g.n:
        raise ContractError(
            "regular critical subgraph must span the whole connected graph"
        )
    for v in range(g.n):
        out = neighborhood_split(g, v)
        if isinstance(out, Inconsistent):
            raise ContractError(f"split at {v}: {out.reason}")
        if not isinstance(out, NeighborhoodSplit):
            return _ensure_verified(g, out, "find_witness")
        for a in out.a:
            res = split_attachment_check(g, out, a)
            if isinstance(res, Inconsistent):
                raise ContractError(f"attachment check at {v}/{a}: {res.reason}")
            if not isinstance(res, int):
                return _ensure_verified(g, res, "find_witness")
        pq = path_quad(g, out)
        if isinstance(pq, Inconsistent):
            raise ContractError(f"path quad at {v}: {pq.reason}")
    if delta >= 5:
        log.warning(
            "probe sweep finished without a certificate at max degree %d; "
            "falling back to the brute-force oracle",
            delta,
        )
        cert = oracle_witness(g)
        if cert is None:
            raise ContractError("oracle found no certificate after a silent sweep")
        return _ensure_verified(g, cert, "find_witness")
    traced = trace_squared_cycle(g)
    if isinstance(traced, Inconsistent):
        raise ContractError(f"squared-cycle trace: {traced.reason}")
    if not isinstance(traced, SquaredCycleLabeling):
        return _ensure_verified(g, traced, "find_witness")
    m = traced.n
    if m == 7:
        positions = is_c7_complement(g)
        if positions is None:
            raise ContractError("7-vertex squared cycle failed recognition")
        return _ensure_verified(g, ExceptionalC7Complement(positions), "find_witness")
    if m % 3 == 0:
        raise ContractError("squared cycle of length divisible by 3 is 3-chromatic")
    vertex_at = traced.vertex_at()
    cycle = tuple(vertex_at[p % m] for p in squared_cycle_hole(m))
    return _ensure_verified(g, HighOddHoleWitness(cycle), "find_witness")
