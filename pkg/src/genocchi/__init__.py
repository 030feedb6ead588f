"""Exact Genocchi, Bernoulli and Euler numbers and polynomials.

Basis expansions, moment integrals, and exact verification of product-sum
identities, all over the rationals.
"""
from .basis import (
    BasisExpansion,
    BasisKind,
    BasisMatrix,
    from_basis,
    genocchi_change_matrix,
    solve_upper_triangular,
    to_bernoulli_basis,
    to_euler_basis,
    to_genocchi_basis,
)
from .exact_arith import binomial, factorial, harmonic, kronecker, rat
from .polynomial import Polynomial
from .sequences import (
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    euler_poly,
    genocchi_number,
    genocchi_poly,
    series_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion",
    "BasisKind",
    "BasisMatrix",
    "Polynomial",
    "bernoulli_number",
    "bernoulli_poly",
    "binomial",
    "euler_number",
    "euler_poly",
    "factorial",
    "from_basis",
    "genocchi_change_matrix",
    "genocchi_number",
    "genocchi_poly",
    "harmonic",
    "kronecker",
    "rat",
    "series_oracle",
    "solve_upper_triangular",
    "to_bernoulli_basis",
    "to_euler_basis",
    "to_genocchi_basis",
]
