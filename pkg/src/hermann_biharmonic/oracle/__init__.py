"""Brute-force matrix Lie-algebra oracle for the closed forms."""

from .algebra import (InvolutionSpec, MatrixLieAlgebra, ResourceError, StructuralError,
                      killing_form, so_algebra, su_algebra)
from .decomposition import DecompositionData, decompose, restricted_roots
from .verify import (OracleReport, TriadBuild, build_so_triad, build_su_triad, build_triad,
                     run_oracle, second_fundamental_form_numeric, verify_closed_forms, verify_duality)

__all__ = [
    "InvolutionSpec", "MatrixLieAlgebra", "ResourceError", "StructuralError", "killing_form",
    "so_algebra", "su_algebra", "DecompositionData", "decompose", "restricted_roots",
    "OracleReport", "TriadBuild", "build_so_triad", "build_su_triad", "build_triad", "run_oracle",
    "second_fundamental_form_numeric", "verify_closed_forms", "verify_duality",
]
