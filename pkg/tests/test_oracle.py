import pytest
from hypothesis import given, settings, strategies as st

from splitfactor.oracle import (
    Composite,
    Prime,
    RhoExhausted,
    is_prime,
    oracle_factorize,
    pollard_rho,
    trial_division_smallest_factor,
)


def sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p::p] = bytearray(len(range(p * p, limit + 1, p)))
    return flags


@pytest.mark.parametrize("n, want", [
    (125, Composite(5)),
    (2, Prime()),
    (3, Prime()),
    (8051, Composite(83)),
    (49, Composite(7)),
    (97, Prime()),
])
def test_trial_division(n, want):
    assert trial_division_smallest_factor(n) == want


def test_trial_division_domain():
    with pytest.raises(ValueError):
        trial_division_smallest_factor(1)


@given(st.integers(2, 10**9))
def test_witness_is_smallest_divisor(n):
    v = trial_division_smallest_factor(n)
    if isinstance(v, Composite):
        assert 1 < v.witness < n and n % v.witness == 0
        assert all(n % f for f in range(2, min(v.witness, 5000)))


@pytest.mark.parametrize("n, want", [(0, False), (1, False), (2, True), (561, False), (97, True),
                                     (2**61 - 1, True), (2**64 - 59, True), (3215031751, False)])
def test_is_prime(n, want):
    assert is_prime(n) is want


def test_is_prime_strong_pseudoprimes():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051):
        assert not is_prime(n)


def test_is_prime_above_64_bits():
    # trial-division path; only composites with small factors are fast here
    assert is_prime(41 * (2**61 - 1)) is False
    assert is_prime(1009 * (2**64 + 13)) is False


def test_is_prime_matches_sieve_to_1e6():
    flags = sieve(10**6)
    for n in range(10**6 + 1):
        assert is_prime(n) == bool(flags[n]), n


def test_is_prime_agrees_with_trial_division_sample():
    for n in range(2, 20000):
        assert is_prime(n) == isinstance(trial_division_smallest_factor(n), Prime)


@pytest.mark.parametrize("n, allowed", [(8051, {83, 97}), (25, {5}), (10403, {101, 103}), (9, {3})])
def test_pollard_rho(n, allowed):
    assert pollard_rho(n) in allowed


def test_pollard_rho_deterministic():
    for n in (8051, 10403, 1009 * 1013, 3 * 5 * 7 * 11):
        assert pollard_rho(n) == pollard_rho(n)


def test_pollard_rho_prime_exhausts():
    with pytest.raises(RhoExhausted):
        pollard_rho(101)


@pytest.mark.parametrize("n", [4, 10, 3])
def test_pollard_rho_domain(n):
    with pytest.raises(ValueError):
        pollard_rho(n)


@given(st.integers(4, 10**12).filter(lambda n: n % 2 and not is_prime(n)))
@settings(max_examples=200)
def test_pollard_rho_divides(n):
    try:
        f = pollard_rho(n)
    except RhoExhausted:
        return
    assert 1 < f < n and n % f == 0


@pytest.mark.parametrize("n, want", [(360, [2, 2, 2, 3, 3, 5]), (97, [97]), (125, [5, 5, 5]), (2, [2])])
def test_oracle_factorize(n, want):
    assert oracle_factorize(n) == want
