"""
Exceptions raised by egcdkit.

Every exception derives from both `EgcdError` and the closest builtin so that
callers can catch either the package base class or the usual builtin.
Failed invariant checks are reported as `CheckResult` values, not exceptions.
"""

from typing import Optional

__all__ = [
    "EgcdError",
    "InvalidInput",
    "DivisionByZero",
    "NonInvertible",
    "MalformedTrace",
    "OracleBoundExceeded",
    "ResourceExhausted",
]


class EgcdError(Exception):
    """
    Base class for all egcdkit errors
    """


class InvalidInput(EgcdError, ValueError):
    """
    Raised when an operand is outside the accepted domain,
    e.g. a negative integer where a non-negative one is required
    """


class DivisionByZero(EgcdError, ZeroDivisionError):
    """
    Raised when a step matrix is requested for b = 0
    """


class NonInvertible(EgcdError, ValueError):
    """
    Raised when a value has no multiplicative inverse modulo m

    :param gcd: the gcd of the reduced value and the modulus, never 1
    :param modulus: the modulus the inverse was requested for
    """

    def __init__(self, gcd: int, modulus: Optional[int] = None):
        self.gcd = gcd
        self.modulus = modulus
        super().__init__(f"not invertible: gcd={gcd}")


class MalformedTrace(EgcdError, ValueError):
    """
    Raised when a trace does not have the shape of a completed execution
    """


class OracleBoundExceeded(EgcdError, ValueError):
    """
    Raised when a brute-force oracle is asked for operands above its bound

    :param bound: the largest operand the oracle accepts
    """

    def __init__(self, value: int, bound: int):
        self.value = value
        self.bound = bound
        super().__init__(f"oracle operand {value} exceeds the bound {bound}")


class ResourceExhausted(EgcdError, RuntimeError):
    """
    Raised when the recursive variant runs out of interpreter stack
    """
