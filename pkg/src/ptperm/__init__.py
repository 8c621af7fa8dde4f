"""Exact counting for the partial transpose of permutation matrices."""
from .core import (
    BlockShape,
    ShapeError,
    as_permutation,
    full_transpose,
    identity,
    inner_partial_transpose,
    is_permutation_matrix,
    is_symmetric,
    outer_block_transpose,
    perm_matrix,
    profile,
    profile_sum,
    shuffle_conjugate,
)
from .formulas import Z2_closed, Z_formula, Ze2_closed, Ze_formula, Zt_closed, Zt_corollaries, telephone
from .oracle import (
    CountReport,
    GuardError,
    check_symmetric_claim,
    count_Z_backtrack,
    count_Z_oracle,
    count_Ze_oracle,
    count_Zt_oracle,
    witnesses,
)
from .verify import run_verify

__version__ = "0.1.0"
