"""Exact theta-function bounds for packing problems.

Thin Python surface over the C++ core: Delsarte LP bounds on the Hamming
cube, LP bounds for spherical codes with verified polynomial certificates,
and symmetry-reduced theta-prime for finite graphs. Rationals cross the
boundary as "p/q" strings; convert with fractions.Fraction as needed.
"""

from ._thetabounds import (
    DomainError,
    ThetabError,
    delsarte_lp_bound,
    dgs_lp_bound,
    hamming_distance,
    harm_dim,
    jacobi,
    krawtchouk,
    poly_eval,
    scheme_eigenmatrix,
    solve_linear,
    sphere_monomial_average,
    stable_set_bruteforce,
    sturm_nonpositive,
    theta_prime_reduced,
    verify_certificate,
    walsh_transform,
    zonal_sum,
)

__all__ = [
    "DomainError",
    "ThetabError",
    "delsarte_lp_bound",
    "dgs_lp_bound",
    "hamming_distance",
    "harm_dim",
    "jacobi",
    "krawtchouk",
    "poly_eval",
    "scheme_eigenmatrix",
    "solve_linear",
    "sphere_monomial_average",
    "stable_set_bruteforce",
    "sturm_nonpositive",
    "theta_prime_reduced",
    "verify_certificate",
    "walsh_transform",
    "zonal_sum",
]

__version__ = "0.1.0"
