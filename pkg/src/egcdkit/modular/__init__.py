from egcdkit.modular.inverse import Modulus, mod_inverse
from egcdkit.modular.rsa import RsaToyKey, rsa_toy_private_exponent

__all__ = ["Modulus", "mod_inverse", "rsa_toy_private_exponent", "RsaToyKey"]
