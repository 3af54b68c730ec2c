"""Command line entry point: ``splitfactor {factor,verify,bench,selftest}``.

Exit codes: 0 success, 1 verification or selftest failure, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import bench
from .core import InconsistencyError, SearchStats, full_factorize
from .oracle import oracle_factorize
from .selftest import run_selftest

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

_DECIMAL = re.compile(r"[0-9]+")
_BITS = re.compile(r"([0-9]+)\.\.([0-9]+)")


def _natural(text: str) -> int:
    if not _DECIMAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def _bit_range(text: str) -> tuple[int, int]:
    m = _BITS.fullmatch(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty bit range {text!r}")
    return lo, hi


def _algorithms(text: str) -> list[str]:
    labels = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [t for t in labels if t not in bench.ALGORITHMS]
    if not labels or unknown:
        raise argparse.ArgumentTypeError(
            f"unknown algorithm(s) {unknown or text!r}; choose from {', '.join(bench.ALGORITHMS)}"
        )
    return labels


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitfactor", description="Base-2 split integer factorization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="print the prime factorization of N")
    p.add_argument("n", type=_natural, help="decimal integer >= 2")
    p.add_argument("--json", action="store_true", help="emit a single JSON object")

    p = sub.add_parser("verify", help="compare against trial division for every n in [2, MAX]")
    p.add_argument("--max", type=_natural, required=True, dest="max")

    p = sub.add_parser("bench", help="benchmark on balanced semiprimes and fit the iteration slope")
    p.add_argument("--csv", required=True, dest="csv_path")
    p.add_argument("--bits", type=_bit_range, default=(16, 40), help="n range in bits, LO..HI (default 16..40)")
    p.add_argument("--samples", type=_natural, default=50)
    p.add_argument("--algorithms", type=_algorithms, default=[bench.SPLIT_SEARCH],
                   help="comma-separated subset of " + ",".join(bench.ALGORITHMS))
    p.add_argument("--seed", type=_natural, default=0)

    sub.add_parser("selftest", help="run the pinned worked-example checks")
    return parser


def cmd_factor(n: int, as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    if n < 2:
        print(f"splitfactor: n must be >= 2, got {n}", file=sys.stderr)
        return EXIT_USAGE
    stats = SearchStats()
    factors = full_factorize(n, stats)
    if as_json:
        doc = {
            "n": str(n),
            "factors": [str(f) for f in factors],
            "inner_iterations": stats.inner_iterations,
            "split_pairs_examined": stats.split_pairs_examined,
            "elapsed_ns": stats.elapsed_ns,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"{n} = {' * '.join(map(str, factors))}\n")
        out.write(
            f"inner_iterations={stats.inner_iterations} "
            f"split_pairs_examined={stats.split_pairs_examined} elapsed_ns={stats.elapsed_ns}\n"
        )
    return EXIT_OK


def cmd_verify(max_n: int, out=None) -> int:
    out = out or sys.stdout
    if max_n < 9:
        print(f"splitfactor: --max must be >= 9, got {max_n}", file=sys.stderr)
        return EXIT_USAGE
    mismatches = 0
    first = None
    for n in range(2, max_n + 1):
        try:
            ok = full_factorize(n) == oracle_factorize(n)
        except InconsistencyError:
            ok = False
        if not ok:
            mismatches += 1
            if first is None:
                first = n
    out.write(f"{max_n - 1} checked, {mismatches} mismatches\n")
    if first is not None:
        out.write(f"first mismatch: n={first}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_bench(csv_path: str, bits=(16, 40), samples: int = 50, algorithms=(bench.SPLIT_SEARCH,),
              seed: int = 0, out=None) -> int:
    out = out or sys.stdout
    try:
        corpus = bench.balanced_semiprimes(bits[0], bits[1], samples, seed)
    except ValueError as exc:
        print(f"splitfactor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    # open before running so an unwritable destination fails fast
    try:
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            records = bench.run_benchmark(corpus, algorithms)
            bench.write_records(records, fh)
    except OSError as exc:
        print(f"splitfactor: cannot write {csv_path}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    out.write(f"wrote {len(records)} records to {csv_path}\n")
    for algo in algorithms:
        if algo != bench.SPLIT_SEARCH:
            continue
        try:
            fit = bench.fit_complexity(records, algo)
        except bench.FitUnavailable as exc:
            out.write(f"{algo}: fit unavailable ({exc})\n")
        else:
            out.write(f"{algo}: slope={fit.slope:.4f} intercept={fit.intercept:.4f} samples={fit.sample_count}\n")
    return EXIT_OK


def cmd_selftest(out=None) -> int:
    out = out or sys.stdout
    ok = run_selftest(lambda line: out.write(line + "\n"))
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "factor":
        return cmd_factor(args.n, args.json)
    if args.command == "verify":
        return cmd_verify(args.max)
    if args.command == "bench":
        return cmd_bench(args.csv_path, args.bits, args.samples, args.algorithms, args.seed)
    return cmd_selftest()


if __name__ == "__main__":
    sys.exit(main())
