"""Connected-graph enumeration, the exhaustive theorem sweep, and certificate JSON.

Generation grows graphs one vertex at a time: every connected graph arises
from a connected graph one vertex smaller by attaching the new vertex to a
nonempty subset (remove any non-cutvertex to see this), and duplicates are
killed by a canonical form: an iteratively refined vertex partition followed
by a branch-and-bound minimum adjacency code over partition-respecting
orderings.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .coloring import chromatic_number
from .graph import Graph, decode_graph6, encode_graph6, max_degree
from .oracle import (
    Certificate,
    CliqueWitness,
    ExceptionalC7Complement,
    HighOddHoleWitness,
    oracle_witness,
    verify_certificate,
)
from .witness import ContractError, find_witness

GENERATION_CAP = 9


class SerializationError(ValueError):
    """Malformed certificate text."""


class SweepError(RuntimeError):
    """A sweep hit a verification failure; carries the offending graph6 line."""

    def __init__(self, line: str, detail: str):
        super().__init__(f"{detail} (graph6: {line})")
        self.line = line
        self.detail = detail


# ---------------------------------------------------------------------------
# canonical form


def _refined_labels(n: int, adj: tuple[int, ...]) -> list[int]:
    labels = [adj[v].bit_count() for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            row = adj[v]
            nbr = []
            while row:
                low = row & -row
                nbr.append(labels[low.bit_length() - 1])
                row ^= low
            nbr.sort()
            sigs.append((labels[v], tuple(nbr)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == labels:
            return labels
        labels = new


def _canonical_code(n: int, adj: tuple[int, ...]) -> int:
    """Minimum upper-triangle adjacency code over partition-respecting orders.

    Positions are filled cell by cell of the refined partition; at each node
    only the candidates achieving the lexicographically least new column are
    branched on, with a per-depth best-prefix cut across branches.
    """
    if n <= 1:
        return 0
    full = n * (n - 1) // 2
    m = sum(row.bit_count() for row in adj) // 2
    if m == 0:
        return 0
    if m == full:
        return (1 << full) - 1
    labels = _refined_labels(n, adj)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(labels[v], []).append(v)
    ordered_cells = [cells[k] for k in sorted(cells)]
    cell_at: list[list[int]] = []
    for cell in ordered_cells:
        cell_at.extend([cell] * len(cell))
    best: list[int | None] = [None] * (n + 1)

    def dfs(d: int, placed: list[int], placed_mask: int, code: int) -> None:
        cur = best[d]
        if cur is None or code < cur:
            best[d] = code
            for i in range(d + 1, n + 1):
                best[i] = None
        elif code > cur:
            return
        if d == n:
            return
        groups: dict[int, list[int]] = {}
        for v in cell_at[d]:
            if placed_mask >> v & 1:
                continue
            bits = 0
            row = adj[v]
            for u in placed:
                bits = bits << 1 | (row >> u & 1)
            groups.setdefault(bits, []).append(v)
        low = min(groups)
        ncode = code << d | low
        for v in groups[low]:
            dfs(d + 1, placed + [v], placed_mask | 1 << v, ncode)

    dfs(0, [], 0, 0)
    assert best[n] is not None
    return best[n]


@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[tuple[int, ...], ...]:
    """One adjacency tuple per isomorphism class of connected graphs on n vertices."""
    if n == 1:
        return ((0,),)
    out: list[tuple[int, ...]] = []
    seen: set[int] = set()
    top = 1 << (n - 1)
    for parent in _connected_level(n - 1):
        for mask in range(1, top):
            adj = [row | ((mask >> v & 1) << (n - 1)) for v, row in enumerate(parent)]
            adj.append(mask)
            code = _canonical_code(n, tuple(adj))
            if code not in seen:
                seen.add(code)
                out.append(tuple(adj))
    return tuple(out)


def generate_connected_graphs(n: int) -> Iterator[Graph]:
    """Stream one representative per isomorphism class of connected graphs on n vertices."""
    if not 1 <= n <= GENERATION_CAP:
        raise ValueError(f"order {n} outside supported range 1..{GENERATION_CAP}")
    for adj in _connected_level(n):
        yield Graph(n, adj)


# ---------------------------------------------------------------------------
# certificate serialization


def serialize_certificate(cert: Certificate) -> str:
    if isinstance(cert, CliqueWitness):
        return json.dumps({"kind": "clique", "vertices": sorted(cert.vertices)})
    if isinstance(cert, HighOddHoleWitness):
        return json.dumps({"kind": "high_odd_hole", "cycle": list(cert.cycle)})
    if isinstance(cert, ExceptionalC7Complement):
        return json.dumps({"kind": "c7_complement", "positions": list(cert.positions)})
    raise SerializationError(f"unknown certificate type {type(cert).__name__}")


def _int_array(obj: object, key: str) -> list[int]:
    value = obj.get(key) if isinstance(obj, dict) else None
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise SerializationError(f"field {key!r} must be an array of integers")
    return value


def deserialize_certificate(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SerializationError("certificate must be a JSON object")
    kind = obj.get("kind")
    if kind == "clique":
        return CliqueWitness(frozenset(_int_array(obj, "vertices")))
    if kind == "high_odd_hole":
        return HighOddHoleWitness(tuple(_int_array(obj, "cycle")))
    if kind == "c7_complement":
        return ExceptionalC7Complement(tuple(_int_array(obj, "positions")))
    raise SerializationError(f"unknown certificate kind {kind!r}")


def _kind(cert: Certificate) -> str:
    return json.loads(serialize_certificate(cert))["kind"]


# ---------------------------------------------------------------------------
# the sweep


@dataclass
class OrderTally:
    n: int
    graphs: int = 0
    cohort: int = 0
    proof_kinds: dict[str, int] = field(default_factory=dict)
    oracle_kinds: dict[str, int] = field(default_factory=dict)
    kind_mismatches: int = 0
    verification_failures: int = 0
    exceptional: int = 0
    seconds: float = 0.0


@dataclass
class SweepReport:
    min_n: int
    max_n: int
    method: str
    jobs: int
    built_in_corpus: bool
    orders: list[OrderTally] = field(default_factory=list)

    @property
    def total_graphs(self) -> int:
        return sum(o.graphs for o in self.orders)

    @property
    def total_cohort(self) -> int:
        return sum(o.cohort for o in self.orders)

    @property
    def total_failures(self) -> int:
        return sum(o.verification_failures for o in self.orders)

    @property
    def total_mismatches(self) -> int:
        return sum(o.kind_mismatches for o in self.orders)

    def exceptional_by_order(self) -> dict[int, int]:
        return {o.n: o.exceptional for o in self.orders if o.exceptional}

    def problems(self) -> list[str]:
        out = []
        if self.total_failures:
            out.append(f"{self.total_failures} verification failure(s)")
        for o in self.orders:
            if o.n != 7 and o.exceptional:
                out.append(f"{o.exceptional} exceptional graph(s) at order {o.n}")
            if self.built_in_corpus and o.n == 7 and o.exceptional != 1:
                out.append(f"expected exactly one exceptional graph at order 7, saw {o.exceptional}")
        return out

    @property
    def ok(self) -> bool:
        return not self.problems()

    def to_dict(self) -> dict:
        return {
            "min_n": self.min_n,
            "max_n": self.max_n,
            "method": self.method,
            "jobs": self.jobs,
            "built_in_corpus": self.built_in_corpus,
            "ok": self.ok,
            "problems": self.problems(),
            "orders": [
                {
                    "n": o.n,
                    "graphs": o.graphs,
                    "cohort": o.cohort,
                    "proof_kinds": dict(sorted(o.proof_kinds.items())),
                    "oracle_kinds": dict(sorted(o.oracle_kinds.items())),
                    "kind_mismatches": o.kind_mismatches,
                    "verification_failures": o.verification_failures,
                    "exceptional": o.exceptional,
                    "seconds": o.seconds,
                }
                for o in self.orders
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        def fmt(kinds: dict[str, int]) -> str:
            return ",".join(f"{k}:{v}" for k, v in sorted(kinds.items())) or "-"

        lines = [
            f"sweep orders {self.min_n}..{self.max_n}  method={self.method}  jobs={self.jobs}",
            f"{'n':>3} {'graphs':>8} {'chi=delta':>9} {'proof':>24} {'oracle':>24} "
            f"{'mism':>5} {'fail':>5} {'exc':>4} {'sec':>7}",
        ]
        for o in self.orders:
            lines.append(
                f"{o.n:>3} {o.graphs:>8} {o.cohort:>9} {fmt(o.proof_kinds):>24} "
                f"{fmt(o.oracle_kinds):>24} {o.kind_mismatches:>5} "
                f"{o.verification_failures:>5} {o.exceptional:>4} {o.seconds:>7.2f}"
            )
        lines.append(
            f"total graphs={self.total_graphs} cohort={self.total_cohort} "
            f"failures={self.total_failures} mismatches={self.total_mismatches} "
            f"result={'PASS' if self.ok else 'FAIL'}"
        )
        return "\n".join(lines)


def _sweep_task(args: tuple[str, str]) -> dict:
    line, method = args
    rec: dict = {
        "line": line,
        "cohort": False,
        "proof_kind": None,
        "oracle_kind": None,
        "error": None,
    }
    try:
        g = decode_graph6(line)
        if encode_graph6(g) != line:
            rec["error"] = "graph6 round trip mismatch"
            return rec
        rec["n"] = g.n
        if g.n == 0:
            return rec
        if chromatic_number(g) != max_degree(g):
            return rec
        rec["cohort"] = True
        if method in ("proof", "both"):
            cert = find_witness(g)
            verdict = verify_certificate(g, cert)
            if not verdict:
                rec["error"] = f"proof certificate rejected: {verdict.reason}"
                return rec
            rec["proof_kind"] = _kind(cert)
        if method in ("oracle", "both"):
            cert = oracle_witness(g)
            if cert is None:
                rec["error"] = "oracle found no certificate for a chi=delta graph"
                return rec
            verdict = verify_certificate(g, cert)
            if not verdict:
                rec["error"] = f"oracle certificate rejected: {verdict.reason}"
                return rec
            rec["oracle_kind"] = _kind(cert)
    except ContractError as exc:
        rec["error"] = f"contract error: {exc}"
    return rec


def _tasks_for_order(n: int, method: str, corpus: list[str] | None) -> Iterator[tuple[str, str]]:
    if corpus is None:
        for g in generate_connected_graphs(n):
            yield encode_graph6(g), method
    else:
        for line in corpus:
            if decode_graph6(line).n == n:
                yield line, method


def theorem_sweep(
    max_n: int,
    method: str = "both",
    min_n: int = 1,
    jobs: int = 1,
    corpus: Iterable[str] | None = None,
) -> SweepReport:
    """Run the selected witness method(s) over every connected graph with
    chromatic number equal to maximum degree, verifying each certificate.

    Per-graph work is independent; with jobs > 1 a process pool is used and
    results are merged in generation order, so the report is identical for
    any worker count.  The first verification failure aborts with the
    offending graph6 line.
    """
    if method not in ("proof", "oracle", "both"):
        raise ValueError(f"unknown method {method!r}")
    if corpus is None and not 1 <= min_n <= max_n <= GENERATION_CAP:
        raise ValueError(f"order range {min_n}..{max_n} outside 1..{GENERATION_CAP}")
    corpus_lines = [line.strip() for line in corpus if line.strip()] if corpus is not None else None
    report = SweepReport(min_n, max_n, method, jobs, corpus_lines is None)
    pool = multiprocessing.Pool(jobs) if jobs > 1 else None
    try:
        for n in range(min_n, max_n + 1):
            tally = OrderTally(n)
            started = time.perf_counter()
            tasks = _tasks_for_order(n, method, corpus_lines)
            results = pool.imap(_sweep_task, tasks, chunksize=32) if pool else map(_sweep_task, tasks)
            for rec in results:
                tally.graphs += 1
                if rec["error"] is not None:
                    tally.verification_failures += 1
                    raise SweepError(rec["line"], rec["error"])
                if not rec["cohort"]:
                    continue
                tally.cohort += 1
                pk, ok = rec["proof_kind"], rec["oracle_kind"]
                if pk is not None:
                    tally.proof_kinds[pk] = tally.proof_kinds.get(pk, 0) + 1
                if ok is not None:
                    tally.oracle_kinds[ok] = tally.oracle_kinds.get(ok, 0) + 1
                if pk is not None and ok is not None and pk != ok:
                    tally.kind_mismatches += 1
                if "c7_complement" in (pk, ok):
                    tally.exceptional += 1
            tally.seconds = time.perf_counter() - started
            report.orders.append(tally)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return report
