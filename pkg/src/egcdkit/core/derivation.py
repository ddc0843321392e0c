"""
Intermediate forms between the recursive and the iterative algorithm.

These return only the coefficient row [x y] and exist to show each
rewriting step preserves the result: `egcd_vector_recursive` is the
recursion written with step matrices, `egcd_coefficients` is the compact
loop over the 3x2 stack built from `step_matrix` and `stack_mul`.
"""

from egcdkit.core.egcd import (
    recursion_depth_bound,
    recursion_headroom,
    row_mul,
    stack_mul,
    step_matrix,
)
from egcdkit.core.types import Nat, Row2, as_nat

__all__ = ["egcd_vector_recursive", "egcd_coefficients"]


def _vector_recursive(row: Row2) -> Row2:
    if row.r1 == 0:
        return Row2(1, 0)
    step = step_matrix(row.r0, row.r1)
    # the matrices are applied on the way out, last generated first
    return row_mul(_vector_recursive(row_mul(row, step)), step)


def egcd_vector_recursive(a: Nat, b: Nat) -> Row2:
    """
    :return: [x y] with gcd(a, b) = a*x + b*y, equal to the coefficients of
        egcd_recursive(a, b)
    """
    a, b = as_nat(a, "a"), as_nat(b, "b")
    recursion_headroom(recursion_depth_bound(a, b))

    return _vector_recursive(Row2(a, b))


def egcd_coefficients(a: Nat, b: Nat) -> Row2:
    """
    :return: [c e] of the final 3x2 stack, equal to the coefficients of
        egcd_iterative(a, b)
    """
    stack = (Row2(as_nat(a, "a"), as_nat(b, "b")), Row2(1, 0), Row2(0, 1))
    while stack[0].r1 != 0:
        stack = stack_mul(stack, step_matrix(stack[0].r0, stack[0].r1))

    return Row2(stack[1].r0, stack[2].r0)
