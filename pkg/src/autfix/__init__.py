"""Exact fixed-point spectra of automorphisms for small finite groups.

Covers Z_{p^a} + Z_{p^b} (a < b) through an explicit matrix realization,
dihedral groups through the holomorph maps f_{alpha,beta}, and arbitrary
small direct sums / dihedral groups through a Cayley-table brute-force
oracle that shares no code with the other two.
"""

from autfix.errors import (
    CapExceededError,
    InvalidInputError,
    NotInvertibleError,
    UnsupportedError,
)
from autfix.spectrum import Spectrum

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "InvalidInputError",
    "NotInvertibleError",
    "Spectrum",
    "UnsupportedError",
]
