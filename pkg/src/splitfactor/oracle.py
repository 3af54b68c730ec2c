"""Textbook factoring and primality routines.

These are the reference side of every differential test and the
classical baselines in the benchmark harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Union

__all__ = [
    "Prime",
    "Composite",
    "PrimalityVerdict",
    "RhoExhausted",
    "trial_division_smallest_factor",
    "is_prime",
    "pollard_rho",
    "oracle_factorize",
]

# Strong-pseudoprime bases that are deterministic for every n < 3.3e24,
# which covers the full 64-bit range (Sorenson & Webster 2015).
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_LIMIT = 1 << 64

RHO_RETRIES = 64


class RhoExhausted(ArithmeticError):
    """Pollard rho hit a trivial cycle for every polynomial constant tried."""


@dataclass(frozen=True)
class Prime:
    pass


@dataclass(frozen=True)
class Composite:
    witness: int


PrimalityVerdict = Union[Prime, Composite]


def trial_division_smallest_factor(n: int) -> PrimalityVerdict:
    """Smallest prime factor of ``n`` by trial division, or :class:`Prime`.

    Tries 2, 3 and then ``6m - 1``, ``6m + 1`` up to ``isqrt(n)``.
    """
    if n < 2:
        raise ValueError(f"trial division needs n >= 2, got {n}")
    for f in (2, 3):
        if n % f == 0:
            return Composite(f) if n != f else Prime()
    limit = isqrt(n)
    f = 5
    while f <= limit:
        if n % f == 0:
            return Composite(f)
        if n % (f + 2) == 0:
            return Composite(f + 2)
        f += 6
    return Prime()


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Exact primality test.

    Below 2**64 this is Miller-Rabin with a fixed deterministic base set.
    Larger inputs fall back to trial division, which is only practical at
    desk scale.
    """
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    if n >= MR_LIMIT:
        return isinstance(trial_division_smallest_factor(n), Prime)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_strong_probable_prime(n, a, d, s) for a in MR_BASES)


def pollard_rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``.

    Floyd cycle detection on ``x -> x*x + c`` starting from ``x = 2``.
    When a run closes its cycle without a factor, ``c`` is bumped and the
    walk restarts, so the answer is the same on every call.
    """
    if n < 4 or n % 2 == 0:
        raise ValueError(f"pollard_rho needs an odd composite, got {n}")
    for c in range(1, RHO_RETRIES + 1):
        x = y = 2
        g = 1
        while g == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            g = gcd(x - y, n)
        if g != n:
            return g
    raise RhoExhausted(f"rho exhausted after {RHO_RETRIES} constants for n={n}")


def oracle_factorize(n: int) -> list[int]:
    """Prime factors of ``n`` in ascending order by repeated trial division."""
    if n < 2:
        raise ValueError(f"oracle_factorize needs n >= 2, got {n}")
    out = []
    while True:
        verdict = trial_division_smallest_factor(n)
        if isinstance(verdict, Prime):
            out.append(n)
            return out
        out.append(verdict.witness)
        n //= verdict.witness
