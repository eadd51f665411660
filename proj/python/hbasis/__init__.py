"""Minimal homology bases of weighted simplicial complexes over Z2."""

from ._hbasis import (
    Complex,
    GuardError,
    ParseError,
    ValidateError,
    approx_basis,
    exact_basis,
    hd_basis,
    oracle_basis,
)

__all__ = [
    "Complex",
    "GuardError",
    "ParseError",
    "ValidateError",
    "approx_basis",
    "exact_basis",
    "hd_basis",
    "oracle_basis",
]
