"""Harmonic and proper-biharmonic regular orbits of rank-one commutative Hermann actions."""

from .solver import (EINSTEIN_CONSTANT, CaseLabel, ClassificationResult, b_norm_sq,
                     biharmonic_polynomial, classify, classify_catalog, norm_alpha_sq,
                     solve_biharmonic, solve_harmonic, tension_coeff)
from .surd import QuadraticSurd, quadratic_roots
from .triad import (InvalidTriadError, Kind, SingularPointError, SymmetricTriad1D,
                    fundamental_cell, is_regular_point)

__all__ = [
    "EINSTEIN_CONSTANT", "CaseLabel", "ClassificationResult", "b_norm_sq", "biharmonic_polynomial",
    "classify", "classify_catalog", "norm_alpha_sq", "solve_biharmonic", "solve_harmonic",
    "tension_coeff", "QuadraticSurd", "quadratic_roots", "InvalidTriadError", "Kind",
    "SingularPointError", "SymmetricTriad1D", "fundamental_cell", "is_regular_point",
]
