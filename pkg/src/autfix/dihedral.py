"""Automorphisms of the dihedral group D_2n realized as Hol(Z_n).

Elements are a^i (rotations) and a^i b (reflections).  The automorphism
f_{alpha,beta} sends a^i to a^(alpha i) and a^i b to a^(alpha i + beta) b,
with alpha a unit mod n and beta arbitrary mod n.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from autfix.errors import CapExceededError, InvalidInputError, UnsupportedError
from autfix.formulas import theta_dihedral_formula
from autfix.modarith import Residue, inv_mod, is_prime, totient, units
from autfix.spectrum import Spectrum, merge_counters

DIHEDRAL_CAP = 2**14
_BLOCK_CELLS = 1 << 22

__all__ = [
    "DihedralElement",
    "DihedralGroup",
    "HolAut",
    "dihedral_apply",
    "dihedral_fixed_set",
    "dihedral_theta_spectrum",
    "enumerate_dihedral_aut",
    "fixed_reflection_index",
    "theta_dihedral_formula",
]


@dataclass(frozen=True)
class DihedralGroup:
    """D_2n, the symmetries of a regular n-gon (order 2n)."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise UnsupportedError(f"need n >= 3, got {self.n}")

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def label(self) -> str:
        return f"D_{self.order}"

    def elements(self) -> list[DihedralElement]:
        """Rotations a^0..a^(n-1) first, then reflections b..a^(n-1) b."""
        return [DihedralElement(i, r) for r in (False, True) for i in range(self.n)]

    def index(self, e: DihedralElement) -> int:
        return e.i + self.n * e.reflected

    def identity(self) -> DihedralElement:
        return DihedralElement(0, False)

    def mul(self, x: DihedralElement, y: DihedralElement) -> DihedralElement:
        # b a^j = a^(-j) b
        j = -y.i if x.reflected else y.i
        return DihedralElement((x.i + j) % self.n, x.reflected != y.reflected)

    def contains(self, e: DihedralElement) -> bool:
        return 0 <= e.i < self.n


class DihedralElement(NamedTuple):
    i: int
    reflected: bool

    def __str__(self) -> str:
        rot = "1" if self.i == 0 else ("a" if self.i == 1 else f"a^{self.i}")
        if not self.reflected:
            return rot
        return "b" if self.i == 0 else f"{rot}b"


@dataclass(frozen=True, order=True)
class HolAut:
    n: int
    alpha: int
    beta: int

    def __post_init__(self):
        if not (0 <= self.alpha < self.n and 0 <= self.beta < self.n):
            raise InvalidInputError(f"({self.alpha}, {self.beta}) not canonical mod {self.n}")
        if math.gcd(self.alpha, self.n) != 1:
            raise InvalidInputError(f"alpha={self.alpha} is not a unit mod {self.n}")

    def __str__(self) -> str:
        return f"f_{{{self.alpha},{self.beta}}}"


def enumerate_dihedral_aut(g: DihedralGroup) -> Iterator[HolAut]:
    """All n*phi(n) automorphisms, lexicographic in (alpha, beta)."""
    for alpha in units(g.n):
        for beta in range(g.n):
            yield HolAut(g.n, alpha, beta)


def dihedral_apply(f: HolAut, e: DihedralElement) -> DihedralElement:
    if not 0 <= e.i < f.n:
        raise InvalidInputError(f"{e!r} is not an element of D_{2 * f.n}")
    if e.reflected:
        return DihedralElement((f.alpha * e.i + f.beta) % f.n, True)
    return DihedralElement(f.alpha * e.i % f.n, False)


def as_permutation(f: HolAut) -> tuple[int, ...]:
    g = DihedralGroup(f.n)
    return tuple(g.index(dihedral_apply(f, e)) for e in g.elements())


def dihedral_fixed_set(f: HolAut) -> frozenset[DihedralElement]:
    return frozenset(e for e in DihedralGroup(f.n).elements() if dihedral_apply(f, e) == e)


def fixed_reflection_index(f: HolAut) -> int:
    """The unique i with f(a^i b) = a^i b, i = (1 - alpha)^(-1) beta mod n.

    Only defined for prime n and alpha != 1, where 1 - alpha is a unit.
    """
    if not is_prime(f.n):
        raise UnsupportedError(f"n={f.n} is not prime")
    if f.alpha == 1:
        raise UnsupportedError("alpha = 1 fixes no reflection or all of them")
    inv = inv_mod(Residue.of(1 - f.alpha, f.n))
    return inv.value * f.beta % f.n


def _tally(n: int, alphas: Iterable[int]) -> Counter:
    """Fixed-set sizes for every f_{alpha,beta} with alpha in ``alphas``.

    Rotations a^i are fixed iff (alpha-1) i = 0 and reflections a^i b iff
    (alpha-1) i + beta = 0 (mod n); both are scanned over all i.
    """
    i = np.arange(n, dtype=np.int64)
    betas = np.arange(n, dtype=np.int64)
    step = max(1, _BLOCK_CELLS // n)
    tally: Counter = Counter()
    for alpha in alphas:
        shifted = (alpha - 1) * i % n
        rot_fixed = int((shifted == 0).sum())
        for start in range(0, n, step):
            ref_fixed = ((shifted[None, :] + betas[start:start + step, None]) % n == 0).sum(axis=1)
            tally.update((ref_fixed + rot_fixed).tolist())
    return tally


def dihedral_theta_spectrum(g: DihedralGroup, workers: int = 1,
                            max_order: int = DIHEDRAL_CAP) -> Spectrum:
    if g.order > max_order:
        raise CapExceededError(f"|D| = {g.order} exceeds enumeration cap {max_order}")
    alphas = units(g.n).members
    if workers <= 1 or len(alphas) == 1:
        tally = _tally(g.n, alphas)
    else:
        chunks = [alphas[i::workers] for i in range(workers) if alphas[i::workers]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
            tally = merge_counters(ex.map(_tally, [g.n] * len(chunks), chunks))
    return Spectrum.from_counter(g.label, g.order, tally)


def dihedral_aut_order(g: DihedralGroup) -> int:
    return g.n * totient(g.n)
