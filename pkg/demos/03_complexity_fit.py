"""
How many scan steps does the search take?
=========================================

Balanced semiprimes (both factors with the same bit length) are the
slowest case.  Count the scan steps and fit log2(steps) against log2(n);
a slope near 0.5 means the cost grows like sqrt(n).
"""

import math
import sys

import numpy as np

from splitfactor.bench import balanced_semiprimes, fit_complexity, run_benchmark

hi = int(sys.argv[1]) if len(sys.argv) > 1 else 34
corpus = balanced_semiprimes(16, hi, 40, seed=1)
records = run_benchmark(corpus, {"split-search", "trial-division"})
split = [r for r in records if r.algorithm == "split-search"]

ratios = np.array([r.inner_iterations / math.isqrt(r.n) for r in split])
print(f"{len(split)} semiprimes, 2**16 .. 2**{hi}")
print(f"steps / sqrt(n): min {ratios.min():.2f}  median {np.median(ratios):.2f}  max {ratios.max():.2f}")

fit = fit_complexity(records)
print(f"log2(steps) = {fit.slope:.3f} * log2(n) + {fit.intercept:.3f}")

for r in split[::8]:
    td = next(x for x in records if x.n == r.n and x.algorithm == "trial-division")
    print(f"n={r.n:>12}  splits={r.split_pairs_examined:>3}  steps={r.inner_iterations:>7}  "
          f"split {r.elapsed_ns / 1e6:7.2f} ms   trial {td.elapsed_ns / 1e6:7.2f} ms")
