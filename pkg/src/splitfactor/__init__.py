"""Integer factorization by base-2 splitting of the two unknown factors."""

from .core import (
    BaseTwoAnchor,
    FactorPair,
    Found,
    InconsistencyError,
    NoNontrivialFactor,
    SearchStats,
    SplitExponents,
    TailDecomposition,
    Transfer,
    TrivialEven,
    anchor,
    decompose_tail,
    enumerate_splits,
    factor_step,
    floor_log2,
    full_factorize,
    search_split,
    solve_offset,
    transfer_coefficient,
    validate_candidate,
)
from .oracle import is_prime, oracle_factorize, pollard_rho, trial_division_smallest_factor

__version__ = "0.1.0"
