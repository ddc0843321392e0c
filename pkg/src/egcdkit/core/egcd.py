"""
Euclid's algorithm and its two extended forms.

`egcd_recursive` is the textbook recursion returning (d, x, y) with
(x, y) = (y', x' - q*y'). `egcd_iterative` is the same computation after
the recursion has been turned into a loop: the step matrices
[[0, 1], [1, -q]] are multiplied into the 3x2 stack [[a, b], [c, d], [e, f]]
as they are generated, which is valid because matrix multiplication is
associative. Both forms return bit-identical triples for every input.

Every function accepts any pair of non-negative integers. For a < b the first
quotient is 0 and the first step only swaps the pair.
"""

import sys
import threading

from loguru import logger

from egcdkit.core.errors import DivisionByZero
from egcdkit.core.types import BezoutTriple, Int, Mat2, Nat, Row2, Stack3x2, as_nat

__all__ = [
    "gcd",
    "egcd_recursive",
    "egcd_iterative",
    "step_matrix",
    "identity",
    "transpose",
    "det",
    "mat2_mul",
    "row_mul",
    "stack_mul",
    "recursion_depth_bound",
    "recursion_headroom",
]

# frames kept free on top of the computed bound for callers and the interpreter
_RECURSION_MARGIN = 256
_recursion_lock = threading.Lock()


def gcd(a: Nat, b: Nat) -> Nat:
    """
    :return: the greatest common divisor of a and b, gcd(a, 0) = a and
        gcd(0, 0) = 0
    """
    a, b = as_nat(a, "a"), as_nat(b, "b")
    while b != 0:
        a, b = b, a % b

    return a


def step_matrix(a: Nat, b: Nat) -> Mat2:
    """
    :return: [[0, 1], [1, -floor(a/b)]], the matrix mapping the row [a b]
        to [b a%b]
    :raises DivisionByZero: if b is 0
    """
    a, b = as_nat(a, "a"), as_nat(b, "b")
    if b == 0:
        raise DivisionByZero("step matrix is undefined for b = 0")

    return Mat2(0, 1, 1, -(a // b))


def identity() -> Mat2:
    return Mat2(1, 0, 0, 1)


def transpose(m: Mat2) -> Mat2:
    return Mat2(m.m00, m.m10, m.m01, m.m11)


def det(m: Mat2) -> Int:
    return m.m00 * m.m11 - m.m01 * m.m10


def mat2_mul(left: Mat2, right: Mat2) -> Mat2:
    """
    :return: the exact product left * right
    """
    return Mat2(
        left.m00 * right.m00 + left.m01 * right.m10,
        left.m00 * right.m01 + left.m01 * right.m11,
        left.m10 * right.m00 + left.m11 * right.m10,
        left.m10 * right.m01 + left.m11 * right.m11,
    )


def row_mul(v: Row2, m: Mat2) -> Row2:
    """
    :return: the exact product of the row vector v with m
    """
    return Row2(v.r0 * m.m00 + v.r1 * m.m10, v.r0 * m.m01 + v.r1 * m.m11)


def stack_mul(stack: Stack3x2, m: Mat2) -> Stack3x2:
    """
    Right-multiply the 3x2 working stack [[a, b], [c, d], [e, f]] by m

    :return: the new stack, each row multiplied by m
    """
    top, middle, bottom = stack
    return row_mul(top, m), row_mul(middle, m), row_mul(bottom, m)


def recursion_depth_bound(a: Nat, b: Nat) -> int:
    """
    Upper bound on the number of frames egcd_recursive uses for (a, b).

    Consecutive Fibonacci numbers are the worst case and need about 1.44
    steps per bit of the larger operand; one more step is needed for the
    swap when a < b, and one frame for the base case.

    :return: the frame bound
    """
    bits = max(as_nat(a, "a"), as_nat(b, "b")).bit_length()
    return (3 * bits) // 2 + 4


def _stack_depth() -> int:
    depth = 0
    frame = sys._getframe(1)
    while frame is not None:
        depth += 1
        frame = frame.f_back
    return depth


def recursion_headroom(frames: int) -> int:
    """
    Make sure the interpreter recursion limit leaves room for `frames` more
    nested calls on top of the current stack. The limit is only ever raised,
    never lowered, so concurrent callers cannot undercut each other.

    CPython 3.11+ does not consume C stack for pure Python calls, so the
    practical ceiling is memory; on older interpreters very deep recursion
    (tens of thousands of frames) may still overflow the C stack.

    :param frames: the number of additional frames needed
    :return: the recursion limit in effect afterwards
    """
    needed = _stack_depth() + frames + _RECURSION_MARGIN
    with _recursion_lock:
        if sys.getrecursionlimit() < needed:
            logger.debug("Raising recursion limit to {}", needed)
            sys.setrecursionlimit(needed)
        return sys.getrecursionlimit()


def _egcd_recursive(a: int, b: int):
    if b == 0:
        return a, 1, 0
    q = a // b
    d, x_prev, y_prev = _egcd_recursive(b, a - q * b)
    return d, y_prev, x_prev - q * y_prev


def egcd_recursive(a: Nat, b: Nat) -> BezoutTriple:
    """
    Recursive extended Euclid's algorithm.

    The recursion depth is iteration_count(a, b) + 1 and is not capped; the
    interpreter recursion limit is raised to recursion_depth_bound(a, b)
    above the current stack before recursing.

    :return: (d, x, y) with d = gcd(a, b) = a*x + b*y, (a, 1, 0) when b = 0
    """
    a, b = as_nat(a, "a"), as_nat(b, "b")
    recursion_headroom(recursion_depth_bound(a, b))
    d, x, y = _egcd_recursive(a, b)

    return BezoutTriple(d, x, y)


def egcd_iterative(alpha: Nat, beta: Nat) -> BezoutTriple:
    """
    Iterative extended Euclid's algorithm.

    The stack [[a, b], [c, d], [e, f]] starts as [[alpha, beta], [1, 0], [0, 1]]
    and is right-multiplied by step_matrix(a, b) until b = 0. The product is
    written out on the six stack entries instead of calling stack_mul, and
    only those six entries are kept, whatever the number of iterations.

    :return: (a, c, e) of the final stack
    """
    a, b = as_nat(alpha, "alpha"), as_nat(beta, "beta")
    c, d, e, f = 1, 0, 0, 1

    while b != 0:
        q = a // b
        # each line is one row of the stack times [[0, 1], [1, -q]]
        a, b = b, a - q * b
        c, d = d, c - q * d
        e, f = f, e - q * f

    return BezoutTriple(a, c, e)
