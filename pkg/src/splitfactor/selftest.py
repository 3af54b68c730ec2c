"""Pinned checks run by ``splitfactor selftest``.

The 125 chain below is the canonical worked example for the method:
125 = 2**6 + 61, the tail 61 splits as 3*2**4 + 3*2**2 + 1, moving two
units down gives 1*2**4 + 11*2**2 + 1, the offset is 2, and
(2**4 + 9) * (2**2 + 1) = 25 * 5.
"""

from __future__ import annotations

from math import isqrt
from typing import Callable, NamedTuple

from . import core
from .core import SplitExponents


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str


def theorem_bound_violations(limit: int = 1 << 10) -> list[tuple[int, int]]:
    """Pairs ``p >= q >= 2`` up to ``limit`` where ``floor_log2(p*q)`` is not ``j+i`` or ``j+i+1``."""
    bad = []
    for q in range(2, limit + 1):
        i = q.bit_length() - 1
        for p in range(q, limit + 1):
            s = i + p.bit_length() - 1
            k = (p * q).bit_length() - 1
            if k != s and k != s + 1:
                bad.append((p, q))
    return bad


def iteration_bound_sample() -> list[int]:
    # odd n up to 2**12 plus a few balanced semiprimes near 2**20 and 2**30
    return list(range(9, 1 << 12, 2)) + [1009 * 1013, 32771 * 32779]


def _chain_125():
    n = 125
    split = SplitExponents(4, 2)
    a = core.anchor(n)
    dec = core.decompose_tail(a.c_k, split)
    tr = core.transfer_coefficient(dec, dec.c_J - 1, split)
    d = core.solve_offset(tr.c_j, tr.c_I_prime, tr.B, split.i)
    pair = core.validate_candidate(tr.c_j, tr.c_I_prime - d, split, n) if d is not None else None
    return a, dec, tr, d, pair


def _expect(name: str, got, want) -> Check:
    return Check(name, got == want, f"got {got!r}, want {want!r}")


def run_checks() -> list[Check]:
    checks = []
    a, dec, tr, d, pair = _chain_125()
    checks.append(_expect("anchor-125", (a.k, a.c_k), (6, 61)))
    checks.append(_expect("decompose-61", (dec.c_J, dec.c_I, dec.B), (3, 3, 1)))
    checks.append(_expect("transfer-c_I'", tr.c_I_prime, 11))
    checks.append(_expect("offset-d", d, 2))

    # the "+B" numerator must not give an integral quotient here
    plus_num, den = 1 * 11 + 1, 1 + (1 << 2)
    checks.append(Check(
        "offset-plus-sign-rejected",
        plus_num % den != 0 and core.solve_offset(1, 11, 1, 2) == 2,
        f"(1*11 + 1) / {den} has remainder {plus_num % den}",
    ))
    checks.append(_expect("validate-25x5", None if pair is None else (pair.p, pair.q), (25, 5)))

    outcome = core.factor_step(125)
    got = (type(outcome).__name__, getattr(outcome, "pair", None))
    checks.append(_expect("factor-step-125", got, ("Found", core.FactorPair(25, 5))))

    bad = theorem_bound_violations()
    checks.append(Check("theorem-bounds-2^10", not bad, f"{len(bad)} violations" + (f", first {bad[0]}" if bad else "")))

    worst = None
    for n in iteration_bound_sample():
        it = core.factor_step(n).stats.inner_iterations
        cap = 16 * (isqrt(n - 1) + 1)
        if it > cap:
            worst = (n, it, cap)
            break
    checks.append(Check("iteration-bound-16sqrt", worst is None,
                        "ok" if worst is None else f"n={worst[0]} used {worst[1]} > {worst[2]}"))
    return checks


def run_selftest(emit: Callable[[str], None] = print) -> bool:
    ok = True
    for c in run_checks():
        emit(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
        ok &= c.passed
    return ok
