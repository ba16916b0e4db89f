"""Numerical checks of group cocycles on SU(2), S^3 and finite groups."""

from ._cocycle import (
    CocycleError,
    beta_contact_xyz,
    beta_symplectic_xyz,
    cs_pairing,
    degree_c1,
    degree_c2,
    homology,
    hopf,
    list_suites,
    quat_exp,
    quat_mul,
    run_suite,
    so3_of,
    so4_of,
)

__all__ = [
    "CocycleError",
    "beta_contact_xyz",
    "beta_symplectic_xyz",
    "cs_pairing",
    "degree_c1",
    "degree_c2",
    "homology",
    "hopf",
    "list_suites",
    "quat_exp",
    "quat_mul",
    "run_suite",
    "so3_of",
    "so4_of",
]
