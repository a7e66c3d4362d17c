"""The reproduction suite: every closed-form claim checked against enumeration.

Each ``check_*`` function returns a list of :class:`Check`; nothing raises
on a mismatch. ``full_suite`` concatenates them in a fixed order.
"""

from __future__ import annotations

import math

from autfix import abelian_rank2 as ab
from autfix import dihedral as dh
from autfix import formulas, oracle
from autfix.modarith import count_double_units, totient
from autfix.spectrum import Check

SPECTRUM_PRIMES = (2, 3, 5)
FPF_CASES = ((2, 1, 3), (3, 1, 2), (3, 1, 3), (2, 2, 3), (5, 1, 2))
DOUBLE_UNIT_MODULI = ((2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3))
FPF_CRITERION_GROUPS = ((3, 1, 2), (2, 1, 3))
DIHEDRAL_PRIMES = (3, 5, 7, 11)
ORACLE_ABELIAN = ((2, 1, 2), (3, 1, 2), (2, 1, 3))
ORACLE_DIHEDRAL = (3, 4, 5, 7)

# Images of the D_8 elements (rows) under f_{1,0}..f_{1,3}, f_{3,0}..f_{3,3}
D8_IMAGE_TABLE = {
    "1":    ["1", "1", "1", "1", "1", "1", "1", "1"],
    "a":    ["a", "a", "a", "a", "a^3", "a^3", "a^3", "a^3"],
    "a^2":  ["a^2", "a^2", "a^2", "a^2", "a^2", "a^2", "a^2", "a^2"],
    "a^3":  ["a^3", "a^3", "a^3", "a^3", "a", "a", "a", "a"],
    "b":    ["b", "ab", "a^2b", "a^3b", "b", "ab", "a^2b", "a^3b"],
    "ab":   ["ab", "a^2b", "a^3b", "b", "a^3b", "b", "ab", "a^2b"],
    "a^2b": ["a^2b", "a^3b", "b", "ab", "a^2b", "a^3b", "b", "ab"],
    "a^3b": ["a^3b", "b", "ab", "a^2b", "ab", "a^2b", "a^3b", "b"],
}


def check_zp_zp2_spectrum(primes=SPECTRUM_PRIMES, workers: int = 1) -> list[Check]:
    out = []
    for p in primes:
        out.extend(formulas.verify_spectrum(p, workers=workers).checks)
    return out


def check_no_fpf_z2_z4() -> list[Check]:
    spec = ab.theta_spectrum(ab.Rank2PGroup(2, 1, 2))
    return [Check("Z_2+Z_4 has no fixed-point-free automorphism", 0, spec[1])]


def check_fpf_counts(cases=FPF_CASES) -> list[Check]:
    out = []
    for p, a, b in cases:
        g = ab.Rank2PGroup(p, a, b)
        out.append(Check(f"{g.label} fixed-point-free count",
                         formulas.fpf_count_general(p, a, b), ab.theta_spectrum(g)[1]))
    return out


def check_order_p2_decomposition(primes=SPECTRUM_PRIMES) -> list[Check]:
    out = []
    for p in primes:
        g = ab.Rank2PGroup(p, 1, 2)
        want = formulas.prop1_atleast_counts(p)
        exact_total = 0
        for h in ab.subgroups_order_p2(g):
            n_at_least = len(ab.at_least_fixers(g, h.elements))
            if h.name == f"J_{p}":
                key = "J_p"
            elif h.name == "J_0":
                key = "J_0"
            else:
                key = "J_k_each"
            out.append(Check(f"{g.label} fixers of at least {h.name}", want[key], n_at_least))
            exact_total += len(ab.exact_fixers(g, h.elements))
        out.append(Check(f"{g.label} exact fixers summed over order-{p * p} subgroups",
                         p**3 - p - 1, exact_total))
    return out


def check_double_units(cases=DOUBLE_UNIT_MODULI) -> list[Check]:
    out = []
    for p, k in cases:
        q = p**k
        scan = sum(1 for a in range(1, q) if math.gcd(a, q) == 1 and math.gcd(a - 1, q) == 1)
        out.append(Check(f"double units mod {q}", scan, count_double_units(p, k)))
    return out


def check_fpf_criterion(groups=FPF_CRITERION_GROUPS) -> list[Check]:
    out = []
    for t in groups:
        g = ab.Rank2PGroup(*t)
        disagree = sum(ab.is_fpf_shift(m) != (len(ab.fixed_set(m)) == 1)
                       for m in ab.enumerate_aut(g))
        out.append(Check(f"{g.label} fpf criterion disagreements", 0, disagree))
    return out


def check_dihedral_prime_spectrum(primes=DIHEDRAL_PRIMES) -> list[Check]:
    out = []
    for p in primes:
        g = dh.DihedralGroup(p)
        spec = dh.dihedral_theta_spectrum(g)
        for d in (1, 2, p, 2 * p):
            out.append(Check(f"{g.label} theta(d={d})", formulas.theta_dihedral_formula(p, d), spec[d]))
    return out


def d8_image_table() -> dict[str, list[str]]:
    g = dh.DihedralGroup(4)
    auts = list(dh.enumerate_dihedral_aut(g))
    return {str(e): [str(dh.dihedral_apply(f, e)) for f in auts] for e in g.elements()}


def check_d8_table() -> list[Check]:
    got = d8_image_table()
    matched = sum(got.get(row, [None] * 8)[j] == cell
                  for row, cells in D8_IMAGE_TABLE.items() for j, cell in enumerate(cells))
    return [Check("D_8 image table cells matching", 64, matched)]


def check_named_dihedral_spectra() -> list[Check]:
    return [
        Check("D_10 spectrum", {1: 0, 2: 15, 5: 4, 10: 1},
              dh.dihedral_theta_spectrum(dh.DihedralGroup(5)).as_dict()),
        Check("D_8 spectrum", {1: 0, 2: 2, 4: 5, 8: 1},
              dh.dihedral_theta_spectrum(dh.DihedralGroup(4)).as_dict()),
    ]


def matrix_permutations(g: ab.Rank2PGroup) -> set[tuple[int, ...]]:
    return {ab.as_permutation(m) for m in ab.enumerate_aut(g)}


def holomorph_permutations(g: dh.DihedralGroup) -> set[tuple[int, ...]]:
    return {dh.as_permutation(f) for f in dh.enumerate_dihedral_aut(g)}


def check_oracle_agreement(abelian=ORACLE_ABELIAN, dihedral=ORACLE_DIHEDRAL) -> list[Check]:
    out = []
    for t in abelian:
        g = ab.Rank2PGroup(*t)
        cg = oracle.build_direct_sum([g.pa, g.pb])
        auts = oracle.brute_force_automorphisms(cg)
        brute = {f.image for f in auts}
        out.append(Check(f"{g.label} matrix vs oracle automorphism sets", True,
                         matrix_permutations(g) == brute))
        out.append(Check(f"{g.label} matrix vs oracle spectrum",
                         oracle.oracle_theta_spectrum(cg, auts=auts).as_dict(),
                         ab.theta_spectrum(g).as_dict()))
    for n in dihedral:
        g = dh.DihedralGroup(n)
        cg = oracle.build_dihedral(n)
        auts = oracle.brute_force_automorphisms(cg)
        brute = {f.image for f in auts}
        out.append(Check(f"{g.label} holomorph vs oracle automorphism sets", True,
                         holomorph_permutations(g) == brute))
        out.append(Check(f"{g.label} holomorph vs oracle spectrum",
                         oracle.oracle_theta_spectrum(cg, auts=auts).as_dict(),
                         dh.dihedral_theta_spectrum(g).as_dict()))
    return out


def check_mass() -> list[Check]:
    out = []
    abelian = sorted({(p, 1, 2) for p in SPECTRUM_PRIMES} | set(FPF_CASES)
                     | set(FPF_CRITERION_GROUPS) | set(ORACLE_ABELIAN))
    for t in abelian:
        g = ab.Rank2PGroup(*t)
        out.append(Check(f"{g.label} spectrum mass", ab.aut_order(g), ab.theta_spectrum(g).mass))
    for n in sorted(set(DIHEDRAL_PRIMES) | set(ORACLE_DIHEDRAL)):
        g = dh.DihedralGroup(n)
        out.append(Check(f"{g.label} spectrum mass", n * totient(n),
                         dh.dihedral_theta_spectrum(g).mass))
    return out


def full_suite(workers: int = 1) -> list[Check]:
    return [
        *check_zp_zp2_spectrum(workers=workers),
        *check_no_fpf_z2_z4(),
        *check_fpf_counts(),
        *check_order_p2_decomposition(),
        *check_double_units(),
        *check_fpf_criterion(),
        *check_dihedral_prime_spectrum(),
        *check_d8_table(),
        *check_named_dihedral_spectra(),
        *check_oracle_agreement(),
        *check_mass(),
    ]
