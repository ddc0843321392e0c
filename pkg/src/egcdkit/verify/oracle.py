"""
Brute-force ground truth and test-input generators.

The oracles are deliberately naive and share no code with the algorithms
they check; they are bounded to keep accidental use on large inputs from
hanging.
"""

from typing import Tuple

from egcdkit.core import BezoutTriple, InvalidInput, Nat, OracleBoundExceeded, as_nat

__all__ = [
    "ORACLE_BOUND",
    "oracle_gcd",
    "oracle_verify",
    "fibonacci_pair",
    "coefficient_bound_holds",
]

ORACLE_BOUND = 10**6


def _bounded(value, name: str) -> Nat:
    value = as_nat(value, name)
    if value > ORACLE_BOUND:
        raise OracleBoundExceeded(value, ORACLE_BOUND)
    return value


def oracle_gcd(a: Nat, b: Nat) -> Nat:
    """
    Greatest common divisor by descending trial division.
    Every integer divides 0, so oracle_gcd(a, 0) = a and oracle_gcd(0, 0) = 0.

    :raises OracleBoundExceeded: if a or b is above ORACLE_BOUND
    """
    a, b = _bounded(a, "a"), _bounded(b, "b")
    if a == 0 or b == 0:
        return a + b

    for candidate in range(min(a, b), 0, -1):
        if a % candidate == 0 and b % candidate == 0:
            return candidate


def oracle_verify(a: Nat, b: Nat, triple: BezoutTriple) -> bool:
    """
    Bezout coefficients are not unique, so the identity is checked rather
    than the coefficients themselves.

    :return: True if triple.d is the trial-division gcd of a and b and
        triple.d = a*x + b*y
    :raises OracleBoundExceeded: if a or b is above ORACLE_BOUND
    """
    d, x, y = triple
    return d == oracle_gcd(a, b) and d == a * x + b * y


def fibonacci_pair(n: int) -> Tuple[Nat, Nat]:
    """
    Consecutive Fibonacci numbers, the worst case input of Euclid's algorithm:
    (F(n+1), F(n)) needs exactly n - 1 iterations.

    :param n: index of the smaller number, F(1) = F(2) = 1
    :return: (F(n+1), F(n))
    :raises InvalidInput: for n < 2
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidInput(f"fibonacci_pair needs n >= 2, got {n!r}")

    smaller, larger = 1, 1
    for _ in range(n - 1):
        smaller, larger = larger, smaller + larger

    return larger, smaller


def coefficient_bound_holds(a: Nat, b: Nat, triple: BezoutTriple) -> bool:
    """
    :return: True if |x| <= max(1, b) and |y| <= max(1, a)
    """
    return abs(triple.x) <= max(1, b) and abs(triple.y) <= max(1, a)
