"""Exact arithmetic substrate: rationals, polynomials, resultants, real roots."""

from .poly import BiPoly, UniPoly, interpolate, resultant, resultant_bivariate
from .roots import AlgebraicReal, certified_sign, isolate_real_roots

__all__ = [
    "AlgebraicReal",
    "BiPoly",
    "UniPoly",
    "certified_sign",
    "interpolate",
    "isolate_real_roots",
    "resultant",
    "resultant_bivariate",
]
