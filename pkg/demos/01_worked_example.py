"""
Factoring 125 by splitting it in base 2
=======================================

Walk through one successful split by hand, then let the search do it.
"""

from splitfactor import (
    SearchStats,
    SplitExponents,
    anchor,
    decompose_tail,
    enumerate_splits,
    factor_step,
    search_split,
    solve_offset,
    transfer_coefficient,
    validate_candidate,
)

n = 125

# leading power of two: 125 = 2**6 + 61
a = anchor(n)
print(f"{n} = 2**{a.k} + {a.c_k}")

# the factors' exponents must add up to k or k - 1
print("candidate (j, i):", [(s.j, s.i) for s in enumerate_splits(a.k)])

# take (4, 2) and write the tail in digits at 2**4, 2**2, 2**0
split = SplitExponents(4, 2)
dec = decompose_tail(a.c_k, split)
print(f"{a.c_k} = {dec.c_J}*2**4 + {dec.c_I}*2**2 + {dec.B}")

# move two units from the 2**4 digit into the 2**2 digit
t = transfer_coefficient(dec, 2, split)
print(f"{a.c_k} = {t.c_j}*2**4 + {t.c_I_prime}*2**2 + {t.B}")

# offset that turns the remainder into c_j * c_i
d = solve_offset(t.c_j, t.c_I_prime, t.B, split.i)
c_i = t.c_I_prime - d
print(f"d = {d}, so c_i = {c_i} and the remainder is {t.B + d * 4} = {t.c_j} * {c_i}")

pair = validate_candidate(t.c_j, c_i, split, n)
print(f"(2**4 + {c_i}) * (2**2 + {t.c_j}) = {pair.p} * {pair.q} = {pair.p * pair.q}")

# the same thing, found by scanning
stats = SearchStats()
print("search_split:", search_split(n, split, stats), "after", stats.inner_iterations, "steps")

out = factor_step(n)
print(type(out).__name__, out.pair, out.stats)
