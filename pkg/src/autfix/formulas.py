"""Closed-form counts, kept apart from every enumerator.

Nothing here iterates over automorphisms; ``verify_spectrum`` is the one
place where a closed form meets an enumeration, and it only reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from autfix.errors import InvalidInputError, UnsupportedError
from autfix.modarith import is_prime
from autfix.spectrum import Check

ZP_ZP2_SOURCE = "Z_p+Z_p^2 full spectrum"
FPF_SOURCE = "fixed-point-free count for a < b"
DIHEDRAL_SOURCE = "D_2p spectrum, p odd prime"


@dataclass(frozen=True)
class FormulaResult:
    group: str
    d: int
    value: int
    source: str


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")


def theta_zp_zp2(p: int, d: int) -> int:
    """theta(Z_p + Z_{p^2}, d) for d in {1, p, p^2, p^3}."""
    _require_prime(p)
    if d == 1:
        return p**3 * (p - 2) ** 2
    if d == p:
        return p * (2 * p**3 - 4 * p**2 + 1)
    if d == p**2:
        return p**3 - p - 1
    if d == p**3:
        return 1
    raise InvalidInputError(f"{d} does not divide {p}^3")


def zp_zp2_results(p: int) -> list[FormulaResult]:
    group = f"Z_{p}+Z_{p * p}"
    return [FormulaResult(group, d, theta_zp_zp2(p, d), ZP_ZP2_SOURCE)
            for d in (1, p, p**2, p**3)]


def fpf_count_general(p: int, a: int, b: int) -> int:
    """Fixed-point-free automorphisms of Z_{p^a} + Z_{p^b}: p^(3a+b-2) (p-2)^2."""
    _require_prime(p)
    if a < 1:
        raise InvalidInputError("exponents must be >= 1")
    if a >= b:
        raise UnsupportedError(f"need a < b, got a={a}, b={b}")
    return p ** (3 * a + b - 2) * (p - 2) ** 2


def aut_order_general(p: int, a: int, b: int) -> int:
    _require_prime(p)
    if a < 1:
        raise InvalidInputError("exponents must be >= 1")
    if a >= b:
        raise UnsupportedError(f"need a < b, got a={a}, b={b}")
    return p ** (3 * a + b - 2) * (p - 1) ** 2


def prop1_atleast_counts(p: int) -> dict[str, int]:
    """How many automorphisms of Z_p + Z_{p^2} fix at least each order-p^2 subgroup.

    Keys: ``J_0`` for <(0,1)>, ``J_k_each`` for any single <(k,1)> with
    k != 0, ``J_p`` for <(1,0),(0,p)>.
    """
    _require_prime(p)
    return {"J_0": p * (p - 1), "J_k_each": p * (p - 1), "J_p": p * p}


def theta_dihedral_formula(p: int, d: int) -> int:
    """theta(D_2p, d) for an odd prime p."""
    if p < 3 or not is_prime(p):
        raise UnsupportedError(f"closed form needs an odd prime, got {p}")
    table = {1: 0, 2: p * (p - 2), p: p - 1, 2 * p: 1}
    if d not in table:
        raise InvalidInputError(f"{d} does not divide {2 * p}")
    return table[d]


@dataclass
class SpectrumVerification:
    group: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)


def verify_spectrum(p: int, workers: int = 1) -> SpectrumVerification:
    """Compare the closed form for Z_p + Z_{p^2} with full enumeration.

    Mismatches are recorded, never raised.
    """
    from autfix.abelian_rank2 import Rank2PGroup, theta_spectrum

    g = Rank2PGroup(p, 1, 2)
    enumerated = theta_spectrum(g, workers=workers)
    out = SpectrumVerification(g.label)
    for r in zp_zp2_results(p):
        out.checks.append(Check(f"{g.label} theta(d={r.d})", r.value, enumerated[r.d]))
    return out
