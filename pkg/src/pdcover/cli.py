"""Command-line driver: ``pdcover solve | bench | generate``.

Exit codes for ``solve``: 0 when every certificate passes, 2 on a parse
error, 3 on a certificate failure, 4 when the engine exceeds its round
cap. ``bench`` exits 3 when a measured round or work count exceeds its
bound.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from .certificates import certify
from .engine import NumericMode, round_bound, solve, work_bound
from .errors import BoundViolated, CoverError, InstanceError, RoundBoundExceeded
from .hypergraph import SetCoverInstance, from_set_cover
from .io import dumps, generate, generate_instance, parse_instance, result_document
from .reference import MAX_ORACLE_VERTICES, brute_force_min_cover

log = logging.getLogger("pdcover")

EXIT_OK, EXIT_PARSE, EXIT_CERT, EXIT_ROUNDS = 0, 2, 3, 4


def _eps(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    if not 0 < q < 1:
        raise argparse.ArgumentTypeError(f"eps must lie in (0, 1), got {text}")
    return q


def _eps_list(text: str) -> list[Fraction]:
    return [_eps(t) for t in text.split(",") if t]


def _u64(text: str) -> int:
    val = int(text)
    if not 0 <= val < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return val


def _hypergraph(inst):
    return from_set_cover(inst) if isinstance(inst, SetCoverInstance) else inst


def solve_document(inst, eps, mode=None, oracle=False, workers=1) -> dict:
    """Solve, certify and summarize one instance; the body of ``pdcover solve``."""
    h = _hypergraph(inst)
    res = solve(h, eps, mode, workers)
    cert = certify(h, res.cover, res.original_packing(), eps)
    orc = None
    if oracle:
        orc = brute_force_min_cover(h) if h.n <= MAX_ORACLE_VERTICES else f"n = {h.n} > {MAX_ORACLE_VERTICES}"
    return result_document(inst, res, cert, orc)


def cmd_solve(args) -> int:
    try:
        inst = parse_instance(Path(args.instance).read_text(encoding="ascii"))
    except (OSError, UnicodeDecodeError, InstanceError) as exc:
        log.error("cannot read %s: %s", args.instance, exc)
        return EXIT_PARSE
    try:
        doc = solve_document(inst, args.eps, args.mode, args.oracle, args.workers)
    except RoundBoundExceeded as exc:
        log.error("%s", exc)
        return EXIT_ROUNDS
    except CoverError as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    text = dumps(doc)
    if args.json == "-":
        sys.stdout.write(text)
    elif args.json:
        Path(args.json).write_text(text)
    ok = doc["certificate"]["passed"] and doc.get("oracle", {}).get("within_bound", True)
    summary = (
        f"{args.instance}: mode={doc['mode']} eps={doc['eps']} cover_weight={doc['cover_weight']} "
        f"packing_weight={doc['packing_weight']} rounds={doc['rounds']} certificates={'pass' if ok else 'FAIL'}"
    )
    if "oracle" in doc and "ratio" in doc["oracle"]:
        summary += f" ratio={doc['oracle']['ratio']}"
    print(summary, file=sys.stderr if args.json == "-" else sys.stdout)
    return EXIT_OK if ok else EXIT_CERT


def _bench_sources(source: str, seed: int, count: int):
    path = Path(source)
    if path.is_dir():
        for f in sorted(p for p in path.iterdir() if p.is_file()):
            yield f.name, parse_instance(f.read_text(encoding="ascii"))
        return
    kind, _, spec = source.partition(":")
    params = {}
    for item in filter(None, spec.split(",")):
        key, _, val = item.partition("=")
        params[key] = int(val)
    for s in range(seed, seed + count):
        yield f"{kind}#{s}", generate_instance(kind, s, **params)


BENCH_COLUMNS = ("instance", "m", "r", "M", "eps", "mode", "rounds", "round_bound", "work", "work_bound", "seconds", "ok")


def bench_rows(instances, eps_list, mode=None, workers=1):
    """Solve every (instance, eps) pair and compare rounds and work with their bounds.

    Yields one dict per pair. The bound columns already include the
    factor 2 allowed in scaled-integer mode.
    """
    for name, inst in instances:
        h = _hypergraph(inst)
        for eps in eps_list:
            t0 = time.perf_counter()
            res = solve(h, eps, mode, workers)
            elapsed = time.perf_counter() - t0
            f = res.mode.bound_factor
            rb, wb = f * round_bound(h.r, h.m, eps), f * work_bound(h.m, h.M, eps)
            yield {
                "instance": name,
                "m": h.m,
                "r": h.r,
                "M": h.M,
                "eps": str(eps),
                "mode": res.mode.value,
                "rounds": res.num_rounds,
                "round_bound": rb,
                "work": res.work,
                "work_bound": wb,
                "seconds": elapsed,
                "ok": res.num_rounds <= rb and res.work <= wb,
            }


def cmd_bench(args) -> int:
    out = sys.stdout
    out.write("\t".join(BENCH_COLUMNS) + "\n")
    bad = 0
    try:
        for row in bench_rows(_bench_sources(args.source, args.seed, args.count), args.eps, args.mode, args.workers):
            bad += not row["ok"]
            cells = [f"{row[c]:.3f}" if isinstance(row[c], float) else str(row[c]) for c in BENCH_COLUMNS]
            out.write("\t".join(cells) + "\n")
        if bad:
            raise BoundViolated(f"{bad} row(s) exceed their bounds")
    except (OSError, CoverError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    except RoundBoundExceeded as exc:
        log.error("%s", exc)
        return EXIT_ROUNDS
    except BoundViolated as exc:
        log.error("%s", exc)
        return EXIT_CERT
    return EXIT_OK


def cmd_generate(args) -> int:
    params = {}
    for item in args.param:
        key, _, val = item.partition("=")
        params[key.replace("-", "_")] = int(val)
    try:
        text = generate(args.kind, args.seed, **params)
    except CoverError as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdcover", description="Parallel primal-dual vertex/set cover.")
    sub = parser.add_subparsers(dest="command", required=True)
    modes = [m.value for m in NumericMode]

    p = sub.add_parser("solve", help="solve one instance file and certify the result")
    p.add_argument("instance")
    p.add_argument("--eps", type=_eps, default=Fraction(1, 10))
    p.add_argument("--mode", choices=modes, default=None, help="default: rational when n*m <= 1e5, else float")
    p.add_argument("--oracle", action="store_true", help="compare with the exact optimum (n <= 24)")
    p.add_argument("--json", metavar="PATH", help="write the result document here ('-' for stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="compare measured rounds and work with their bounds")
    b.add_argument("source", help="directory of instance files, or KIND:key=val,... generator spec")
    b.add_argument("--eps", type=_eps_list, default=[Fraction(1, 10)], help="comma-separated list")
    b.add_argument("--mode", choices=modes, default=None)
    b.add_argument("--seed", type=_u64, default=0)
    b.add_argument("--count", type=int, default=1, help="instances drawn from a generator spec")
    b.add_argument("--workers", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("generate", help="write a seeded instance file")
    g.add_argument("kind")
    g.add_argument("--seed", type=_u64, default=0)
    g.add_argument("-p", "--param", action="append", default=[], metavar="KEY=VAL")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
