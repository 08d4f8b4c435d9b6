"""Exact weight enumerators of linear codes via lattices of saturated sets.

A linear [n, k] code over GF(p), GF(p^m), or Q is given by a generator
matrix.  The saturated subsets of its column positions (the flats of the
column matroid) carry counting polynomials zeta_S(q); summing them yields
the comprehensive enumerator omega(q, x, y) and the refined enumerator
rho(q, z, x, y).  Evaluating omega at a finite field order recovers the
classical weight distribution of the corresponding scalar extension, and
everything here is verified against brute-force enumeration.
"""

from .codes import Code, indices_from_mask, mask_from_indices
from .codefile import format_code_text, parse_code_text
from .closed_forms import (
    gaussian_binomial,
    golay24_generator,
    golay24_table_rho,
    golay24_table_rows,
    hamming_dual_refined,
    is_mds,
    mds_refined,
)
from .enumerators import (
    EnumeratorResult,
    analyze,
    characteristic_polynomial,
    comprehensive,
    macwilliams_transform,
    min_distance,
    refined,
    specialize_to_field_size,
)
from .fields import (
    ExtensionField,
    Field,
    PrimeField,
    QQ,
    RationalField,
    make_field,
)
from .intlattice import IntMatrix, hnf, kernel_basis_int, row_saturation, smith_divisors
from .lattice import DEFAULT_FLAT_BUDGET, FlatLattice, enumerate_flats
from .matrices import EchelonBasis, Matrix
from .oracle import (
    DEFAULT_ORACLE_BUDGET,
    VerifyReport,
    brute_min_distance,
    brute_weights,
    verify_enumerators,
    zero_set_census,
)
from .qpoly import QPoly
from .specialize import (
    SpecializationReport,
    compare_specializations,
    integral_basis,
    reduce_mod_p,
)
from .wpoly import WPoly, qpoly_parse, wpoly_parse

__version__ = "0.1.0"

__all__ = [
    "Code", "EchelonBasis", "EnumeratorResult", "ExtensionField", "Field",
    "FlatLattice", "IntMatrix", "Matrix", "PrimeField", "QPoly", "QQ",
    "RationalField", "SpecializationReport", "VerifyReport", "WPoly",
    "DEFAULT_FLAT_BUDGET", "DEFAULT_ORACLE_BUDGET",
    "analyze", "brute_min_distance", "brute_weights",
    "characteristic_polynomial", "compare_specializations", "comprehensive",
    "enumerate_flats", "format_code_text", "gaussian_binomial",
    "golay24_generator", "golay24_table_rho", "golay24_table_rows",
    "hamming_dual_refined", "hnf", "indices_from_mask", "integral_basis",
    "is_mds", "kernel_basis_int", "macwilliams_transform", "make_field",
    "mask_from_indices", "mds_refined", "min_distance", "parse_code_text",
    "qpoly_parse", "reduce_mod_p", "refined", "row_saturation",
    "smith_divisors", "specialize_to_field_size", "verify_enumerators",
    "wpoly_parse", "zero_set_census",
]
