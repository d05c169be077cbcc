"""Exact motivic DT invariants, Kac polynomials, and the refined Hua series.

Thin convenience layer over the compiled ``_core`` extension. All values are
exact: polynomial coefficients come back as integer (or rational) strings and
exponents are integers in the variable v = q^(1/2).
"""

from ._core import (
    Quiver,
    burnside_check,
    count_kac,
    count_simple,
    dt_invariants,
    kac_polynomials,
    refined_invariants,
    stable_counts,
)

__all__ = [
    "Quiver",
    "burnside_check",
    "count_kac",
    "count_simple",
    "dt_invariants",
    "kac_polynomials",
    "refined_invariants",
    "stable_counts",
]
