import numpy as np
import pytest

from autfix.dihedral import (
    DihedralElement,
    DihedralGroup,
    HolAut,
    as_permutation,
    dihedral_apply,
    dihedral_aut_order,
    dihedral_fixed_set,
    dihedral_theta_spectrum,
    enumerate_dihedral_aut,
    fixed_reflection_index,
    theta_dihedral_formula,
)
from autfix.errors import CapExceededError, InvalidInputError, UnsupportedError
from autfix.modarith import totient

R = lambda i: DihedralElement(i, False)  # noqa: E731
F = lambda i: DihedralElement(i, True)  # noqa: E731


def test_group_bounds():
    with pytest.raises(UnsupportedError):
        DihedralGroup(2)
    assert DihedralGroup(3).order == 6


def test_presentation_relations():
    for n in (3, 4, 7, 10):
        g = DihedralGroup(n)
        a, b, one = R(1), F(0), g.identity()
        x = one
        for _ in range(n):
            x = g.mul(x, a)
        assert x == one
        assert g.mul(b, b) == one
        ba = g.mul(b, a)
        assert g.mul(ba, ba) == one
        # a^i b is the product of a^i and b
        assert all(g.mul(R(i), b) == F(i) for i in range(n))


@pytest.mark.parametrize("n", range(3, 31))
def test_automorphisms_preserve_products(n):
    g = DihedralGroup(n)
    elems = g.elements()
    auts = list(enumerate_dihedral_aut(g))
    assert len(auts) == n * totient(n) == dihedral_aut_order(g)
    table = np.array([[g.index(g.mul(x, y)) for y in elems] for x in elems])
    for f in auts:
        perm = np.array(as_permutation(f))
        assert len(set(perm.tolist())) == 2 * n
        # f(xy) == f(x) f(y) for every pair
        assert np.array_equal(perm[table], table[perm[:, None], perm[None, :]])


def test_enumeration_examples():
    auts = list(enumerate_dihedral_aut(DihedralGroup(4)))
    assert [(f.alpha, f.beta) for f in auts] == [(1, 0), (1, 1), (1, 2), (1, 3),
                                                 (3, 0), (3, 1), (3, 2), (3, 3)]
    assert len(list(enumerate_dihedral_aut(DihedralGroup(5)))) == 20


def test_holaut_validation():
    with pytest.raises(InvalidInputError):
        HolAut(4, 2, 0)
    with pytest.raises(InvalidInputError):
        HolAut(4, 1, 4)


def test_apply_examples():
    assert dihedral_apply(HolAut(4, 3, 1), F(1)) == F(0)
    assert dihedral_apply(HolAut(4, 3, 2), F(3)) == F(3)
    for e in DihedralGroup(6).elements():
        assert dihedral_apply(HolAut(6, 1, 0), e) == e
    with pytest.raises(InvalidInputError):
        dihedral_apply(HolAut(4, 1, 0), R(5))


def test_fixed_set_examples():
    assert dihedral_fixed_set(HolAut(5, 1, 0)) == frozenset(DihedralGroup(5).elements())
    assert dihedral_fixed_set(HolAut(5, 2, 1)) == {R(0), F(4)}
    assert dihedral_fixed_set(HolAut(5, 1, 2)) == {R(i) for i in range(5)}


def test_fixed_reflection_index_examples():
    for alpha in (2, 3, 4):
        assert fixed_reflection_index(HolAut(5, alpha, 0)) == 0
    assert fixed_reflection_index(HolAut(5, 2, 1)) == 4
    assert fixed_reflection_index(HolAut(7, 3, 5)) == 1
    assert dihedral_apply(HolAut(7, 3, 5), F(1)) == F(1)


def test_fixed_reflection_index_errors():
    with pytest.raises(UnsupportedError):
        fixed_reflection_index(HolAut(5, 1, 2))
    with pytest.raises(UnsupportedError):
        fixed_reflection_index(HolAut(9, 2, 1))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_unique_fixed_reflection_for_prime_n(p):
    for f in enumerate_dihedral_aut(DihedralGroup(p)):
        fs = dihedral_fixed_set(f)
        assert len(fs) != 1
        if f.alpha != 1:
            assert fs == {R(0), F(fixed_reflection_index(f))}


@pytest.mark.parametrize("n, expected", [
    (5, {1: 0, 2: 15, 5: 4, 10: 1}),
    (4, {1: 0, 2: 2, 4: 5, 8: 1}),
    (3, {1: 0, 2: 3, 3: 2, 6: 1}),
])
def test_spectrum_examples(n, expected):
    assert dihedral_theta_spectrum(DihedralGroup(n)).as_dict() == expected


def test_d8_fixer_sets():
    by_size = {}
    for f in enumerate_dihedral_aut(DihedralGroup(4)):
        by_size.setdefault(len(dihedral_fixed_set(f)), set()).add((f.alpha, f.beta))
    assert by_size[2] == {(3, 1), (3, 3)}
    assert by_size[4] == {(1, 1), (1, 2), (1, 3), (3, 0), (3, 2)}
    assert by_size[8] == {(1, 0)}
    assert 1 not in by_size


def test_d10_fixer_sets():
    by_size = {}
    for f in enumerate_dihedral_aut(DihedralGroup(5)):
        by_size.setdefault(len(dihedral_fixed_set(f)), set()).add((f.alpha, f.beta))
    assert by_size[2] == {(a, b) for a in (2, 3, 4) for b in range(5)}
    assert by_size[5] == {(1, b) for b in range(1, 5)}


@pytest.mark.parametrize("n", range(3, 31))
def test_spectrum_matches_fixed_set_scan(n):
    g = DihedralGroup(n)
    scan = {}
    for f in enumerate_dihedral_aut(g):
        k = len(dihedral_fixed_set(f))
        scan[k] = scan.get(k, 0) + 1
    spec = dihedral_theta_spectrum(g)
    assert {d: c for d, c in spec.items() if c} == scan
    assert spec.mass == n * totient(n)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_spectrum_matches_formula_for_primes(p):
    spec = dihedral_theta_spectrum(DihedralGroup(p))
    for d in (1, 2, p, 2 * p):
        assert spec[d] == theta_dihedral_formula(p, d)


def test_formula_examples_and_errors():
    assert theta_dihedral_formula(5, 2) == 15
    assert theta_dihedral_formula(7, 14) == 1
    # enumeration of Aut D_14
    assert dihedral_theta_spectrum(DihedralGroup(7))[7] == theta_dihedral_formula(7, 7) == 6
    with pytest.raises(UnsupportedError):
        theta_dihedral_formula(4, 2)
    with pytest.raises(UnsupportedError):
        theta_dihedral_formula(2, 2)
    with pytest.raises(InvalidInputError):
        theta_dihedral_formula(5, 3)


def test_composite_n_breaks_prime_formula():
    spec = dihedral_theta_spectrum(DihedralGroup(4))
    assert spec[2] != 4 * (4 - 2)
    assert spec[4] != 4 - 1


def test_workers_and_cap():
    g = DihedralGroup(30)
    assert dihedral_theta_spectrum(g, workers=2) == dihedral_theta_spectrum(g)
    with pytest.raises(CapExceededError):
        dihedral_theta_spectrum(g, max_order=32)


def test_as_permutation_identity():
    assert as_permutation(HolAut(5, 1, 0)) == tuple(range(10))
