"""
Multiplicative inverses modulo m from the Bezout coefficients of the
iterative extended Euclid's algorithm.
"""

from dataclasses import dataclass
from typing import Union

from loguru import logger

from egcdkit.core import InvalidInput, Nat, NonInvertible, as_nat, egcd_iterative

__all__ = ["Modulus", "mod_inverse"]


@dataclass(frozen=True)
class Modulus:
    """
    A modulus m >= 1
    """

    m: Nat

    def __post_init__(self):
        as_nat(self.m, "m")
        if self.m < 1:
            raise InvalidInput("modulus must be at least 1")

    @classmethod
    def of(cls, value: Union["Modulus", int]) -> "Modulus":
        return value if isinstance(value, Modulus) else cls(value)

    def __int__(self) -> int:
        return self.m


def mod_inverse(a: Nat, modulus: Union[Modulus, int]) -> Nat:
    """
    The inverse of a modulo m, canonicalized into [0, m).

    a is reduced modulo m first; the Bezout coefficient x of
    egcd_iterative(a mod m, m) is the inverse once mapped into [0, m).
    Every value is invertible modulo 1 and the inverse is 0.

    :param a: the value to invert
    :param modulus: the modulus, a Modulus or an int >= 1
    :return: the unique v in [0, m) with (a * v) mod m = 1 mod m
    :raises NonInvertible: if gcd(a mod m, m) != 1, carrying that gcd
    """
    m = Modulus.of(modulus).m
    d, x, _ = egcd_iterative(as_nat(a, "a") % m, m)
    if d != 1:
        logger.debug("{} has no inverse modulo {}: gcd={}", a, m, d)
        raise NonInvertible(d, m)

    return x % m
