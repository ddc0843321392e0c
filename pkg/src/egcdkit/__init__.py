"""
Recursive and iterative extended Euclid's algorithms over arbitrary precision
integers.

The iterative form is obtained from the recursive one by writing each step as
a 2x2 matrix and accumulating the matrices as they are generated. A traced
mode records every loop boundary and checks the matrix loop invariant on each
row. Modular inverses, brute-force oracles and a recursive versus iterative
benchmark are built on top.
"""

# flake8: noqa

import sys

# operands and traces exceed the default 4300 digit limit of int/str conversion
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

from .logger import LoggerConfig, configure_logger, logger
from .version import (
    __version__,
    build_type,
    version,
    version_base,
    version_build,
    version_major,
    version_minor,
    version_patch,
)

__all__ = [
    "__version__",
    "version_base",
    "build_type",
    "version",
    "version_major",
    "version_minor",
    "version_patch",
    "version_build",
    "configure_logger",
    "logger",
    "LoggerConfig",
    "BezoutTriple",
    "gcd",
    "egcd_recursive",
    "egcd_iterative",
    "egcd_traced",
    "mod_inverse",
]

from egcdkit.core import BezoutTriple, egcd_iterative, egcd_recursive, gcd
from egcdkit.modular import mod_inverse
from egcdkit.verify import egcd_traced
