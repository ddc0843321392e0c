"""
Textbook RSA key derivation as a worked example of modular inverses.

This is not a cryptographic library: primality of p and q is the caller's
responsibility and there is no padding or any other hardening.
"""

from dataclasses import dataclass

from loguru import logger

from egcdkit.core import InvalidInput, Nat, as_nat
from egcdkit.modular.inverse import mod_inverse

__all__ = ["rsa_toy_private_exponent", "RsaToyKey"]


def _totient(p: Nat, q: Nat) -> Nat:
    p, q = as_nat(p, "p"), as_nat(q, "q")
    if p < 2 or q < 2:
        raise InvalidInput(f"p and q must be at least 2, got p={p}, q={q}")
    if p == q:
        raise InvalidInput(f"p and q must differ, got p = q = {p}")
    return (p - 1) * (q - 1)


def rsa_toy_private_exponent(p: Nat, q: Nat, e: Nat) -> Nat:
    """
    :param p: a prime, not checked
    :param q: a prime different from p, not checked
    :param e: the public exponent, coprime to (p-1)(q-1)
    :return: d = e^-1 mod (p-1)(q-1)
    :raises InvalidInput: if p = q or either is below 2
    :raises NonInvertible: if e is not coprime to (p-1)(q-1)
    """
    return mod_inverse(e, _totient(p, q))


@dataclass(frozen=True)
class RsaToyKey:
    """
    A textbook RSA key pair (n, e, d)
    """

    n: Nat
    e: Nat
    d: Nat

    @classmethod
    def generate(cls, p: Nat, q: Nat, e: Nat = 65537) -> "RsaToyKey":
        d = rsa_toy_private_exponent(p, q, e)
        logger.debug("Derived toy RSA key for n={}", p * q)
        return cls(n=p * q, e=e, d=d)

    def _check_message(self, value: Nat) -> Nat:
        value = as_nat(value, "message")
        if value >= self.n:
            raise InvalidInput(f"message {value} must be below n={self.n}")
        return value

    def encrypt(self, message: Nat) -> Nat:
        return pow(self._check_message(message), self.e, self.n)

    def decrypt(self, ciphertext: Nat) -> Nat:
        return pow(self._check_message(ciphertext), self.d, self.n)
