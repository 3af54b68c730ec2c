"""Instrumented benchmark runs and the iteration-count complexity fit."""

from __future__ import annotations

import csv
import io
import os
import random
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO, Union

import numpy as np

from .core import Found, NoNontrivialFactor, factor_step
from .oracle import Prime, RhoExhausted, is_prime, pollard_rho, trial_division_smallest_factor

__all__ = [
    "ALGORITHMS",
    "CSV_HEADER",
    "BenchRecord",
    "ComplexityFit",
    "BenchConfigError",
    "FitUnavailable",
    "RecordWriteError",
    "run_benchmark",
    "fit_complexity",
    "write_records",
    "read_records",
    "balanced_semiprimes",
    "random_prime",
]

SPLIT_SEARCH = "split-search"
TRIAL_DIVISION = "trial-division"
POLLARD_RHO = "pollard-rho"
ALGORITHMS = (SPLIT_SEARCH, TRIAL_DIVISION, POLLARD_RHO)
OUTCOMES = ("found", "no-factor", "even")

CSV_FIELDS = ("n", "bits", "algorithm", "inner_iterations", "split_pairs_examined", "elapsed_ns", "outcome")
CSV_HEADER = ",".join(CSV_FIELDS)

MIN_FIT_SAMPLES = 10
MIN_FIT_SPAN_BITS = 10


class BenchConfigError(ValueError):
    pass


class FitUnavailable(ValueError):
    pass


class RecordWriteError(OSError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    n: int
    bits: int
    algorithm: str
    inner_iterations: int
    split_pairs_examined: int
    elapsed_ns: int
    outcome: str


@dataclass(frozen=True)
class ComplexityFit:
    slope: float
    intercept: float
    sample_count: int


def _run_split_search(n):
    outcome = factor_step(n)
    if isinstance(outcome, Found):
        label = "found"
    elif isinstance(outcome, NoNontrivialFactor):
        label = "no-factor"
    else:
        label = "even"
    s = outcome.stats
    return label, s.inner_iterations, s.split_pairs_examined, s.elapsed_ns


def _run_trial_division(n):
    start = time.perf_counter_ns()
    verdict = trial_division_smallest_factor(n)
    elapsed = time.perf_counter_ns() - start
    if isinstance(verdict, Prime):
        label = "no-factor"
    elif verdict.witness == 2:
        label = "even"
    else:
        label = "found"
    return label, 0, 0, elapsed


def _run_pollard_rho(n):
    start = time.perf_counter_ns()
    if n % 2 == 0:
        label = "even" if n > 2 else "no-factor"
    elif is_prime(n):
        label = "no-factor"
    else:
        try:
            pollard_rho(n)
        except RhoExhausted:
            trial_division_smallest_factor(n)
        label = "found"
    return label, 0, 0, time.perf_counter_ns() - start


_RUNNERS = {
    SPLIT_SEARCH: _run_split_search,
    TRIAL_DIVISION: _run_trial_division,
    POLLARD_RHO: _run_pollard_rho,
}


def run_benchmark(n_values: Sequence[int], algorithms: Iterable[str]) -> list[BenchRecord]:
    """One record per ``(n, algorithm)`` pair, ``n`` outermost, in input order.

    Algorithm labels are validated before anything runs.  Rows follow the
    order of :data:`ALGORITHMS` within each ``n``.
    """
    chosen = set(algorithms)
    if not chosen:
        raise BenchConfigError("no algorithm selected")
    unknown = chosen.difference(ALGORITHMS)
    if unknown:
        raise BenchConfigError(f"unknown algorithm label(s): {', '.join(sorted(unknown))}")
    for n in n_values:
        if n < 2:
            raise BenchConfigError(f"benchmark inputs must be >= 2, got {n}")
    ordered = [a for a in ALGORITHMS if a in chosen]

    records = []
    for n in n_values:
        for algo in ordered:
            label, iters, splits, elapsed = _RUNNERS[algo](n)
            records.append(
                BenchRecord(
                    n=n,
                    bits=n.bit_length(),
                    algorithm=algo,
                    inner_iterations=iters,
                    split_pairs_examined=splits,
                    elapsed_ns=max(1, elapsed),
                    outcome=label,
                )
            )
    return records


def fit_complexity(records: Sequence[BenchRecord], algorithm: str = SPLIT_SEARCH) -> ComplexityFit:
    """Least-squares line through ``(log2 n, log2 inner_iterations)``.

    Only records of ``algorithm`` with outcome ``found`` and a positive
    iteration count qualify.  Needs at least 10 of them spread over at
    least 10 bits of ``n``, otherwise raises :class:`FitUnavailable`.
    """
    usable = [
        r for r in records
        if r.algorithm == algorithm and r.outcome == "found" and r.inner_iterations > 0
    ]
    if len(usable) < MIN_FIT_SAMPLES:
        raise FitUnavailable(f"need {MIN_FIT_SAMPLES} qualifying records, have {len(usable)}")
    # float(n) is fine here: only the logarithm matters
    x = np.log2(np.array([float(r.n) for r in usable]))
    y = np.log2(np.array([float(r.inner_iterations) for r in usable]))
    if x.max() - x.min() < MIN_FIT_SPAN_BITS:
        raise FitUnavailable(f"n spans {x.max() - x.min():.2f} bits, need {MIN_FIT_SPAN_BITS}")
    slope, intercept = np.polyfit(x, y, 1)
    return ComplexityFit(float(slope), float(intercept), len(usable))


def _write_rows(records, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow([
            str(r.n), r.bits, r.algorithm, r.inner_iterations,
            r.split_pairs_examined, r.elapsed_ns, r.outcome,
        ])


def write_records(records: Iterable[BenchRecord], destination: Union[str, os.PathLike, TextIO]) -> None:
    """Write records as CSV to a path or an open text stream.

    Failures to open or write a path are re-raised as
    :class:`RecordWriteError` naming the path.
    """
    if isinstance(destination, io.TextIOBase) or hasattr(destination, "write"):
        _write_rows(records, destination)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            _write_rows(records, fh)
    except OSError as exc:
        raise RecordWriteError(exc.errno, f"cannot write records: {exc.strerror}", os.fspath(destination)) from exc


def read_records(source: Union[str, os.PathLike, TextIO]) -> list[BenchRecord]:
    """Inverse of :func:`write_records`."""
    if hasattr(source, "read"):
        return _parse(source)
    with open(source, encoding="utf-8", newline="") as fh:
        return _parse(fh)


def _parse(fh):
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_FIELDS:
        raise ValueError(f"bad header {header!r}, expected {CSV_HEADER!r}")
    out = []
    for row in reader:
        n, bits, algo, iters, splits, elapsed, outcome = row
        out.append(BenchRecord(int(n), int(bits), algo, int(iters), int(splits), int(elapsed), outcome))
    return out


def random_prime(bits: int, rng: random.Random, low: Optional[int] = None) -> int:
    """Uniform-ish random prime with exactly ``bits`` bits (and ``>= low`` if given)."""
    if bits < 2:
        raise ValueError("need at least 2 bits")
    lo = max(1 << (bits - 1), low or 0)
    hi = (1 << bits) - 1
    while True:
        cand = rng.randint(lo, hi) | 1
        if cand <= hi and is_prime(cand):
            return cand


def balanced_semiprimes(lo_bits: int, hi_bits: int, samples: int, seed: int = 0) -> list[int]:
    """Deterministic corpus of ``p*q`` with ``p``, ``q`` prime of equal bit length.

    Target sizes are spread evenly so every ``n`` lies in
    ``[2**lo_bits, 2**hi_bits]``.  Sorted ascending.
    """
    if samples <= 0:
        return []
    if lo_bits < 6 or hi_bits < lo_bits:
        raise ValueError(f"bad bit range {lo_bits}..{hi_bits}")
    # halves whose products can land inside the window at all
    h_min, h_max = lo_bits // 2 + 1, (hi_bits + 1) // 2
    if h_min > h_max:
        raise ValueError(f"bit range {lo_bits}..{hi_bits} is too narrow for balanced semiprimes")
    rng = random.Random(seed)
    lo_n, hi_n = 1 << lo_bits, 1 << hi_bits
    out = []
    for t in np.linspace(lo_bits, hi_bits, samples):
        half = min(max(int(round(t / 2)), h_min), h_max)
        while True:
            n = random_prime(half, rng) * random_prime(half, rng)
            if lo_n <= n <= hi_n:
                break
        out.append(n)
    out.sort()
    return out
