from egcdkit.core.derivation import egcd_coefficients, egcd_vector_recursive
from egcdkit.core.egcd import (
    det,
    egcd_iterative,
    egcd_recursive,
    gcd,
    identity,
    mat2_mul,
    recursion_depth_bound,
    recursion_headroom,
    row_mul,
    stack_mul,
    step_matrix,
    transpose,
)
from egcdkit.core.errors import (
    DivisionByZero,
    EgcdError,
    InvalidInput,
    MalformedTrace,
    NonInvertible,
    OracleBoundExceeded,
    ResourceExhausted,
)
from egcdkit.core.types import BezoutTriple, Int, Mat2, Nat, Row2, Stack3x2, as_nat

__all__ = [
    "Nat",
    "Int",
    "as_nat",
    "Mat2",
    "Row2",
    "Stack3x2",
    "BezoutTriple",
    "gcd",
    "egcd_recursive",
    "egcd_iterative",
    "egcd_vector_recursive",
    "egcd_coefficients",
    "step_matrix",
    "identity",
    "transpose",
    "det",
    "mat2_mul",
    "row_mul",
    "stack_mul",
    "recursion_depth_bound",
    "recursion_headroom",
    "EgcdError",
    "InvalidInput",
    "DivisionByZero",
    "NonInvertible",
    "MalformedTrace",
    "OracleBoundExceeded",
    "ResourceExhausted",
]
