"""Command-line front end.

Exit codes: 0 yes/ok, 1 no/violation, 2 usage or input error, 3 timeout.
"""

from __future__ import annotations

import argparse
import gc
import logging
import signal
import statistics
import sys
from typing import Optional, Sequence

from . import instances
from .colouring import ColouringError, verify_proper
from .graph import decompose, semi_core_edge_bound
from .instances import FormatError, read_colouring, read_graph, write_colouring
from .solver import chromatic_index, solve

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Timeout(Exception):
    pass


def _load_graph(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return read_graph(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    except FormatError as exc:
        raise _UsageError(f"{path}: {exc}") from None


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _UsageError(f"cannot write {path}: {exc.strerror}") from None


def _fmt_time(t: Optional[float]) -> str:
    return "-" if t is None else f"{t * 1e3:.3f} ms"


def cmd_solve(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise _UsageError("--k must be non-negative")
    graph = _load_graph(args.graph)

    def on_alarm(signum, frame):
        raise _Timeout

    if args.timeout:
        signal.signal(signal.SIGALRM, on_alarm)
        signal.setitimer(signal.ITIMER_REAL, args.timeout)
    try:
        report = solve(graph, args.k, check=args.check)
    except _Timeout:
        print(f"TIMEOUT after {args.timeout} s")
        return EXIT_TIMEOUT
    finally:
        if args.timeout:
            signal.setitimer(signal.ITIMER_REAL, 0)

    print("YES" if report.decision else "NO")
    print(f"delta: {report.delta}")
    print(f"p: {report.p}")
    print(f"q: {'-' if report.q is None else report.q}")
    print(f"semi-core edges: {'-' if report.semi_core_edges is None else report.semi_core_edges}")
    print(f"shortcut: {report.shortcut}")
    for phase in ("decompose", "semicore", "extend", "total"):
        print(f"t_{phase}: {_fmt_time(report.timings.get(phase))}")
    if report.decision and args.out:
        _write(args.out, write_colouring(report.witness))
    return EXIT_YES if report.decision else EXIT_NO


def cmd_chromatic_index(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    if graph.m == 0:
        raise _UsageError("the graph has no edges; its chromatic index is not defined here")
    value, witness = chromatic_index(graph, check=args.check)
    delta = max(graph.degrees())
    print(f"{value} (Class {1 if value == delta else 2})")
    if args.out:
        _write(args.out, write_colouring(witness))
    return EXIT_YES


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    try:
        with open(args.colouring, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.colouring}: {exc.strerror}") from None
    try:
        colouring = read_colouring(text, graph)
    except FormatError as exc:
        raise _UsageError(f"{args.colouring}: {exc}") from None
    for u, v, c in colouring.items():
        if c is not None and c > args.k:
            print(f"INVALID: edge {u}-{v} has colour {c} outside palette 1..{args.k}")
            return EXIT_NO
    verdict = verify_proper(colouring, require_complete=True)
    if not verdict:
        print(f"INVALID: {verdict.describe()}")
        return EXIT_NO
    print("OK")
    return EXIT_YES


def cmd_decompose(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    dec = decompose(graph)
    print(f"n: {graph.n}")
    print(f"m: {graph.m}")
    print(f"delta: {dec.delta}")
    print(f"p: {dec.p}")
    print(f"q: {dec.q}")
    print(f"semi-core edges: {dec.semi_core.m} (bound k^2 p / 2 at k = delta: "
          f"{semi_core_edge_bound(dec.delta, dec.p)})")
    print(f"excluded vertices: {len(dec.excluded_order)}")
    print("core: " + " ".join(map(str, dec.core_vertices)))
    return EXIT_YES


_FAMILIES = {
    "complete": (instances.gen_complete, [int]),
    "cycle": (instances.gen_cycle, [int]),
    "path": (instances.gen_path, [int]),
    "star": (instances.gen_star, [int]),
    "petersen": (instances.gen_petersen, []),
    "random": (instances.gen_random, [int, float]),
    "few-max-degree": (instances.gen_few_max_degree, [int, int, int]),
}


def cmd_generate(args: argparse.Namespace) -> int:
    func, kinds = _FAMILIES[args.family]
    if len(args.params) != len(kinds):
        raise _UsageError(f"{args.family} takes {len(kinds)} parameter(s), got {len(args.params)}")
    try:
        params = [kind(x) for kind, x in zip(kinds, args.params)]
    except ValueError:
        raise _UsageError(f"bad parameters for {args.family}: {args.params}") from None
    if args.family in ("random", "few-max-degree"):
        params.append(args.seed)
    try:
        graph = func(*params)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _write(args.out, instances.write_graph(graph))
    return EXIT_YES


BENCH_COLUMNS = ("n", "m", "q", "t_decompose", "t_semicore", "t_extend", "t_total")


def bench_rows(k: int, p: int, n_values: Sequence[int], seed: int, repeats: int) -> list[dict]:
    """Median per-phase solve times on ``gen_few_max_degree`` instances."""
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    rows = []
    for n in n_values:
        graph = instances.gen_few_max_degree(p, k, n, seed)
        samples: dict[str, list[float]] = {c: [] for c in BENCH_COLUMNS[3:]}
        report = None
        for _ in range(repeats):
            gc.collect()
            gc.disable()
            try:
                report = solve(graph, k)
            finally:
                gc.enable()
            for phase in ("decompose", "semicore", "extend", "total"):
                samples["t_" + phase].append(report.timings.get(phase, 0.0))
        row = {"n": n, "m": graph.m, "q": report.q}
        row.update({c: statistics.median(v) for c, v in samples.items()})
        rows.append(row)
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        n_values = [int(x) for x in args.n.split(",") if x]
    except ValueError:
        raise _UsageError(f"--n must be a comma-separated list of integers, got {args.n!r}") from None
    if not n_values:
        raise _UsageError("--n needs at least one value")
    try:
        rows = bench_rows(args.k, args.p, n_values, args.seed, args.repeats)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    header = f"{'n':>9} {'m':>9} {'q':>5} " + " ".join(f"{c:>13}" for c in BENCH_COLUMNS[3:])
    print(header)
    for r in rows:
        print(f"{r['n']:>9} {r['m']:>9} {r['q']:>5} "
              + " ".join(f"{r[c] * 1e3:>10.3f} ms" for c in BENCH_COLUMNS[3:]))
    print()
    print(",".join(BENCH_COLUMNS))
    for r in rows:
        print(",".join(str(r[c]) if c in ("n", "m", "q") else f"{r[c]:.9f}" for c in BENCH_COLUMNS))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgecolour", description="k-edge colouring solver")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log every extension step to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide k-edge colourability")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write the witness colouring here on YES")
    p.add_argument("--timeout", type=float, help="wall-clock limit in seconds (exit 3)")
    p.add_argument("--check", action="store_true", help="verify extension invariants at every step")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("chromatic-index", help="compute the chromatic index")
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_chromatic_index)

    p = sub.add_parser("verify", help="check a colouring file")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="print semi-core statistics")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("generate", help="write a generated graph")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="time the solver phases for growing n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(message)s")
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ColouringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
