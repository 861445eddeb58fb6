"""Command-line interface.

Exit codes: 0 success (certificate, exceptional graph, or verified accept),
1 rejection or sweep failure, 2 input-contract error, 64 usage error,
74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import chromatic_number
from .graph import GraphError, cycle_power, decode_graph6, encode_graph6, max_degree
from .oracle import (
    Certificate,
    CliqueWitness,
    ExceptionalC7Complement,
    HighOddHoleWitness,
    oracle_witness,
    verify_certificate,
)
from .sweep import (
    SerializationError,
    SweepError,
    deserialize_certificate,
    serialize_certificate,
    theorem_sweep,
)
from .witness import ContractError, find_witness

EX_OK = 0
EX_REJECT = 1
EX_CONTRACT = 2
EX_USAGE = 64
EX_IOERR = 74

JOBS_ENV = "CHIDELTA_JOBS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="chidelta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("witness", help="find a certificate for a chi=delta graph")
    w.add_argument("--graph", required=True, help="graph6 line, or '-' for stdin")
    w.add_argument("--method", choices=("proof", "oracle", "both"), default="proof")
    w.add_argument("--format", choices=("json", "text"), default="text")

    c = sub.add_parser("chi", help="print chromatic number and maximum degree")
    c.add_argument("--graph", required=True, help="graph6 line, or '-' for stdin")

    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("--graph", required=True, help="graph6 line, or '-' for stdin")
    v.add_argument("--certificate", required=True, help="path to certificate JSON")

    s = sub.add_parser("sweep", help="exhaustive check over small connected graphs")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--min-n", type=int, default=1)
    s.add_argument("--method", choices=("proof", "oracle", "both"), default="both")
    s.add_argument("--jobs", type=int, default=None, help=f"workers (default ${JOBS_ENV} or 1)")
    s.add_argument("--corpus", help="replay graph6 lines from a file instead of generating")
    s.add_argument("--json", dest="json_out", help="also write the JSON report to this path")

    g = sub.add_parser("gen", help="emit generator graphs as graph6")
    g.add_argument("--squared-cycle", type=int, required=True, metavar="N")
    return parser


def _read_graph(arg: str) -> str:
    if arg == "-":
        try:
            line = sys.stdin.readline()
        except OSError as exc:
            raise IOError(str(exc)) from exc
        return line
    return arg


def _cert_text(cert: Certificate) -> str:
    if isinstance(cert, CliqueWitness):
        return "kind: clique\nvertices: " + " ".join(map(str, sorted(cert.vertices)))
    if isinstance(cert, HighOddHoleWitness):
        return "kind: high_odd_hole\ncycle: " + " ".join(map(str, cert.cycle))
    if isinstance(cert, ExceptionalC7Complement):
        return (
            "kind: c7_complement\npositions: "
            + " ".join(map(str, cert.positions))
            + "\nnote: unique exceptional graph (complement of the 7-cycle)"
        )
    raise ValueError(f"unknown certificate {cert!r}")


def _cmd_witness(args) -> int:
    g = decode_graph6(_read_graph(args.graph))
    certs: dict[str, Certificate] = {}
    if args.method in ("proof", "both"):
        certs["proof"] = find_witness(g)
    if args.method in ("oracle", "both"):
        cert = oracle_witness(g)
        if cert is None:
            raise ContractError("oracle found no clique, high odd hole, or exceptional graph")
        certs["oracle"] = cert
    if args.method == "both":
        agree = type(certs["proof"]) is type(certs["oracle"])
        if args.format == "json":
            print(json.dumps({
                "proof": json.loads(serialize_certificate(certs["proof"])),
                "oracle": json.loads(serialize_certificate(certs["oracle"])),
                "kinds_agree": agree,
            }))
        else:
            print("[proof]\n" + _cert_text(certs["proof"]))
            print("[oracle]\n" + _cert_text(certs["oracle"]))
            print(f"kinds agree: {'yes' if agree else 'no'}")
    else:
        cert = certs[args.method]
        print(serialize_certificate(cert) if args.format == "json" else _cert_text(cert))
    return EX_OK


def _cmd_chi(args) -> int:
    g = decode_graph6(_read_graph(args.graph))
    print(f"chi={chromatic_number(g)} delta={max_degree(g)}")
    return EX_OK


def _cmd_verify(args) -> int:
    g = decode_graph6(_read_graph(args.graph))
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IOError(str(exc)) from exc
    try:
        cert = deserialize_certificate(text)
    except SerializationError as exc:
        print(f"reject: malformed certificate: {exc}")
        return EX_REJECT
    verdict = verify_certificate(g, cert)
    if verdict:
        print("accept")
        return EX_OK
    print(f"reject: {verdict.reason}")
    return EX_REJECT


def _cmd_sweep(args) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1"))
    if jobs < 1:
        raise _UsageError(f"--jobs must be positive, got {jobs}")
    corpus = None
    if args.corpus:
        try:
            with open(args.corpus, encoding="utf-8") as fh:
                corpus = fh.readlines()
        except OSError as exc:
            raise IOError(str(exc)) from exc
    try:
        report = theorem_sweep(
            args.max_n, method=args.method, min_n=args.min_n, jobs=jobs, corpus=corpus
        )
    except SweepError as exc:
        print(f"sweep failed: {exc.detail}", file=sys.stderr)
        print(f"offending graph6 line: {exc.line}", file=sys.stderr)
        return EX_REJECT
    except GraphError:
        raise  # malformed corpus line: input contract, not usage
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(report.to_text())
    if args.json_out:
        try:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(report.to_json() + "\n")
        except OSError as exc:
            raise IOError(str(exc)) from exc
    return EX_OK if report.ok else EX_REJECT


def _cmd_gen(args) -> int:
    n = args.squared_cycle
    if n < 3:
        raise _UsageError(f"squared cycle needs at least 3 vertices, got {n}")
    print(encode_graph6(cycle_power(n, 2)))
    return EX_OK


def cli_dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    handlers = {
        "witness": _cmd_witness,
        "chi": _cmd_chi,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
        "gen": _cmd_gen,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (GraphError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_CONTRACT
    except IOError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EX_IOERR


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
