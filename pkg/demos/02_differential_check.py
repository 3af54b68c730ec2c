"""
Checking the split search against textbook methods
==================================================

The split search is compared with trial division on a range of inputs,
and Pollard rho is run on a few semiprimes as a second classical baseline.
"""

import time

from splitfactor import full_factorize, is_prime, oracle_factorize, pollard_rho

LIMIT = 20000

t = time.perf_counter()
bad = [n for n in range(2, LIMIT + 1) if full_factorize(n) != oracle_factorize(n)]
print(f"{LIMIT - 1} inputs compared in {time.perf_counter() - t:.2f}s, {len(bad)} mismatches")

for n in (8051, 10403, 1009 * 1013, 65537 * 65539):
    f = pollard_rho(n)
    print(f"{n}: rho -> {f} * {n // f}, split search -> {full_factorize(n)}")

# a prime is reported as itself, after the oracle confirms it
p = 2**31 - 1
print(p, full_factorize(p), is_prime(p))
