"""Exact Riordan, Double Riordan and k-Riordan groups over truncated power series."""
from .errors import RiordanError
from .matrix import TriangularMatrix
from .morphisms import (
    MorphismId,
    chi,
    chi_i,
    is_type_almost_appell,
    phi,
    phi_k,
    psi_checkerboard,
    psi_type2,
    verify_homomorphism,
)
from .multi_riordan import KRiordanArray, identity_k, inverse_k, make_kriordan, multiply_k
from .riordan import RiordanArray, identity, inverse, make_riordan, multiply, pascal
from .series import Series, comp_inverse, compose, reciprocal

__version__ = "0.1.0"
