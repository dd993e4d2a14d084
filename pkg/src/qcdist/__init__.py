"""Distance tools for quasi-cyclic protograph-based LDPC codes.

Provable upper bounds on the minimum Hamming distance of (optionally
punctured) quasi-cyclic codes via column-subset permanents of the weight
matrix, explicit codeword constructions that witness the bounds, cyclic
protograph expansion including the two-stage CCSDS AR4JA process, and a
brute-force distance oracle for small expanded codes.
"""

from .bounds import BoundQuery, BoundReport, enumerate_candidates, theorem1_bound, theorem2_bound
from .bundled import bundled_index, bundled_path
from .codeword import (
    CheckLevel,
    QcCodeword,
    RemovalCertificate,
    RemovalRejected,
    check_removal,
    lemma1_codeword,
    lemma2_codeword,
    transmitted_weight,
    verify_codeword,
)
from .exact import DimensionCapExceeded, ExactResult, exact_min_distance
from .expansion import (
    ShiftAssignment,
    ValidationReport,
    expand,
    lift_puncture,
    to_scalar,
    two_stage_expand,
    validate_first_stage,
)
from .matrix import (
    BinaryMatrix,
    MatrixFormatError,
    PolyMatrix,
    PunctureSet,
    WeightMatrix,
    load_poly_matrix,
    load_weight_matrix,
    parse_poly_matrix,
    parse_weight_matrix,
    remove_rows,
    select_columns,
    weight_matrix_of,
)
from .permanent import perm_cofactor_family, perm_int, perm_ring
from .ring import (
    CirculantMatrix,
    ModulusMismatchError,
    RingPoly,
    circulant_from_poly,
    poly_add,
    poly_from_circulant,
    poly_mul,
    poly_weight,
    right_mul_vector,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix",
    "BoundQuery",
    "BoundReport",
    "CheckLevel",
    "CirculantMatrix",
    "DimensionCapExceeded",
    "ExactResult",
    "MatrixFormatError",
    "ModulusMismatchError",
    "PolyMatrix",
    "PunctureSet",
    "QcCodeword",
    "RemovalCertificate",
    "RemovalRejected",
    "RingPoly",
    "ShiftAssignment",
    "ValidationReport",
    "WeightMatrix",
    "bundled_index",
    "bundled_path",
    "check_removal",
    "circulant_from_poly",
    "enumerate_candidates",
    "exact_min_distance",
    "expand",
    "lemma1_codeword",
    "lemma2_codeword",
    "lift_puncture",
    "load_poly_matrix",
    "load_weight_matrix",
    "parse_poly_matrix",
    "parse_weight_matrix",
    "perm_cofactor_family",
    "perm_int",
    "perm_ring",
    "poly_add",
    "poly_from_circulant",
    "poly_mul",
    "poly_weight",
    "remove_rows",
    "right_mul_vector",
    "select_columns",
    "theorem1_bound",
    "theorem2_bound",
    "to_scalar",
    "transmitted_weight",
    "two_stage_expand",
    "validate_first_stage",
    "verify_codeword",
    "weight_matrix_of",
]
