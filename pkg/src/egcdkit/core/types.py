"""
Value types shared by every egcdkit algorithm.

Integers are plain Python ints, which are arbitrary precision; `Nat` and `Int`
are aliases documenting the sign contract. All containers are frozen
dataclasses so results can be shared freely between threads.
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from egcdkit.core.errors import InvalidInput

__all__ = [
    "Nat",
    "Int",
    "as_nat",
    "Mat2",
    "Row2",
    "BezoutTriple",
    "Stack3x2",
]

Nat = int
Int = int


def as_nat(value, name: str = "value") -> Nat:
    """
    :param value: the candidate non-negative integer
    :param name: the parameter name used in the error message
    :return: value as an int if it is a non-negative integer
    :raises InvalidInput: for negative values, bools and non-integers
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(
            f"{name} must be a non-negative integer, got {type(value).__name__}"
        )
    if value < 0:
        raise InvalidInput(f"{name} must be non-negative, got {value}")

    return int(value)


@dataclass(frozen=True)
class Mat2:
    """
    A row-major 2x2 integer matrix [[m00, m01], [m10, m11]]
    """

    m00: Int
    m01: Int
    m10: Int
    m11: Int

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (m00, m01), (m10, m11) = rows
        return cls(m00, m01, m10, m11)

    def rows(self) -> Tuple[Tuple[Int, Int], Tuple[Int, Int]]:
        return (self.m00, self.m01), (self.m10, self.m11)

    def __str__(self) -> str:
        return f"[[{self.m00},{self.m01}],[{self.m10},{self.m11}]]"


@dataclass(frozen=True)
class Row2:
    """
    A 1x2 integer row vector [r0 r1]
    """

    r0: Int
    r1: Int

    def __iter__(self) -> Iterator[Int]:
        yield self.r0
        yield self.r1

    def __str__(self) -> str:
        return f"[{self.r0},{self.r1}]"


@dataclass(frozen=True)
class BezoutTriple:
    """
    The result (d, x, y) of an extended gcd computation with d = a*x + b*y

    :param d: the greatest common divisor of the inputs
    :param x: Bezout coefficient of the first input
    :param y: Bezout coefficient of the second input
    """

    d: Nat
    x: Int
    y: Int

    def __iter__(self) -> Iterator[int]:
        yield self.d
        yield self.x
        yield self.y

    def satisfies(self, a: Nat, b: Nat) -> bool:
        """
        :return: True if d = a*x + b*y and d divides both a and b
        """
        if self.d != a * self.x + b * self.y:
            return False
        if self.d == 0:
            return a == 0 and b == 0
        return a % self.d == 0 and b % self.d == 0


# the 3x2 working stack [[a, b], [c, d], [e, f]] of the iterative algorithm
Stack3x2 = Tuple[Row2, Row2, Row2]
