"""Exact modular integer arithmetic and the small counting functions built on it.

Moduli are capped at 2**31 so every product of two residues fits in 64 bits.
Python integers would not overflow anyway, but the cap keeps the contract
identical to a fixed-width implementation and rejects absurd inputs early.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from autfix.errors import InvalidInputError, NotInvertibleError

MAX_MODULUS = 2**31


def _check_modulus(n: int) -> None:
    if n < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {n}")
    if n > MAX_MODULUS:
        raise InvalidInputError(f"modulus {n} exceeds cap 2**31")


@dataclass(frozen=True, order=True)
class Residue:
    """A residue class stored by its least nonnegative representative."""

    value: int
    modulus: int

    def __post_init__(self):
        _check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise InvalidInputError(
                f"{self.value} is not canonical modulo {self.modulus}"
            )

    @classmethod
    def of(cls, value: int, modulus: int) -> Residue:
        """Reduce an arbitrary integer into canonical form."""
        _check_modulus(modulus)
        return cls(value % modulus, modulus)

    def _same(self, other: Residue) -> None:
        if self.modulus != other.modulus:
            raise InvalidInputError(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: Residue) -> Residue:
        self._same(other)
        return Residue((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        self._same(other)
        return Residue((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: Residue) -> Residue:
        self._same(other)
        return Residue((self.value * other.value) % self.modulus, self.modulus)

    def __neg__(self) -> Residue:
        return Residue(-self.value % self.modulus, self.modulus)

    def is_unit(self) -> bool:
        return math.gcd(self.value, self.modulus) == 1

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True)
class UnitGroup:
    """The units of Z_n, listed in ascending order."""

    modulus: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, u) -> bool:
        return int(u) in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise InvalidInputError("gcd is defined here for nonnegative integers")
    if a == 0 and b == 0:
        raise InvalidInputError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs are bounded by the modulus cap."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise InvalidInputError(f"cannot factor {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    if n < 1:
        raise InvalidInputError(f"totient needs n >= 1, got {n}")
    result = n
    for q in factorize(n):
        result -= result // q
    return result


@lru_cache(maxsize=256)
def units(n: int) -> UnitGroup:
    _check_modulus(n)
    members = np.flatnonzero(np.gcd(np.arange(n, dtype=np.int64), n) == 1)
    return UnitGroup(n, tuple(members.tolist()))


def inv_mod(u: Residue) -> Residue:
    if math.gcd(u.value, u.modulus) != 1:
        raise NotInvertibleError(f"{u} is not a unit")
    return Residue(pow(u.value, -1, u.modulus), u.modulus)


def count_double_units(p: int, alpha: int) -> int:
    """Number of a in [1, p**alpha - 1] with both a and a - 1 coprime to p.

    Units mod p**alpha that are not congruent to 1 mod p, so
    phi(p**alpha) - p**(alpha-1) = p**alpha - 2 p**(alpha-1).
    """
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    if alpha < 1:
        raise InvalidInputError(f"exponent must be >= 1, got {alpha}")
    return p**alpha - 2 * p ** (alpha - 1)


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    ds = [1]
    for q, k in factorize(n).items():
        ds = [d * q**e for d in ds for e in range(k + 1)]
    return sorted(ds)
