"""Compound-matrix cohomology actions against the product oracle."""

import math
from fractions import Fraction

import pytest

from conftest import GAMMA, PLASTIC
from toralmix import (
    DegreeOutOfRange,
    eigen_match_distance,
    induced_action,
    jordan_structure,
    lefschetz_number,
    lefschetz_reference,
    spectrum_products_oracle,
)
from toralmix.exact import rank_fraction


def _inverse_eigs(t):
    return [1.0 / z for z in t.eigenvalues]


def test_cat_degree_one_is_inverse_matrix(cat):
    act = induced_action(cat, 1)
    assert [[int(x) for x in row] for row in act.matrix] == [[1, -1], [-1, 2]]
    mods = sorted(abs(z) for z in act.spectrum)
    assert mods == pytest.approx([1 / GAMMA, GAMMA], abs=1e-10)


def test_degree_zero_is_identity_on_constants(cat, plastic):
    for t in (cat, plastic):
        act = induced_action(t, 0)
        assert act.dim == 1
        assert act.matrix == ((Fraction(1),),)
        assert act.spectrum == (1 + 0j,)


def test_top_degree_is_inverse_determinant(cat, plastic):
    for t in (cat, plastic):
        act = induced_action(t, t.dim)
        assert act.dim == 1
        assert act.matrix[0][0] == Fraction(t.det)  # det(M^-1) = det(M) for |det|=1


def test_plastic_degree_two_moduli(plastic):
    act = induced_action(plastic, 2)
    mods = sorted(abs(z) for z in act.spectrum)
    expected = sorted([PLASTIC ** -0.5, PLASTIC ** -0.5, PLASTIC])
    assert mods == pytest.approx(expected, abs=1e-9)


def test_degree_out_of_range(cat):
    with pytest.raises(DegreeOutOfRange):
        induced_action(cat, 3)
    with pytest.raises(DegreeOutOfRange):
        induced_action(cat, -1)


def test_products_oracle_identities(cat):
    # full product = det, degree 1 = the eigenvalues themselves
    eigs = _inverse_eigs(cat)
    full = spectrum_products_oracle(eigs, 2)
    assert len(full) == 1 and abs(full[0] - 1.0) < 1e-12
    one = spectrum_products_oracle(eigs, 1)
    assert eigen_match_distance(one, eigs) < 1e-12


def test_oracle_equivalence_on_corpus(corpus100):
    # compound eigenvalues == l-fold products of eigenvalues of M^-1
    for t in corpus100:
        inv_eigs = _inverse_eigs(t)
        for l in range(t.dim + 1):
            act = induced_action(t, l)
            oracle = spectrum_products_oracle(inv_eigs, l)
            assert eigen_match_distance(act.spectrum, oracle) < 1e-8


def test_oracle_equivalence_dimension_six(corpus500):
    # the invariant extends to d = 6, which corpus100 never reaches
    six = [t for t in corpus500 if t.dim == 6][:20]
    assert six
    for t in six:
        inv_eigs = _inverse_eigs(t)
        for l in range(t.dim + 1):
            act = induced_action(t, l)
            assert eigen_match_distance(
                act.spectrum, spectrum_products_oracle(inv_eigs, l)
            ) < 1e-8


def test_dimension_is_binomial(corpus100):
    for t in corpus100[:25]:
        for l in range(t.dim + 1):
            assert induced_action(t, l).dim == math.comb(t.dim, l)


def test_poincare_duality_of_spectra(corpus100):
    for t in corpus100[:40]:
        det_inv = Fraction(t.det)
        for l in range(t.dim + 1):
            sig_l = induced_action(t, l).spectrum
            sig_dual = induced_action(t, t.dim - l).spectrum
            mirrored = [complex(det_inv) / z for z in sig_l]
            assert eigen_match_distance(sig_dual, mirrored) < 1e-8


def test_lefschetz_identity_exact(cat, corpus100):
    # cat map: 1 - 3 + 1 = -1 = det(I - M^-1)
    assert lefschetz_number(cat) == Fraction(-1) == lefschetz_reference(cat)
    for t in corpus100:
        assert lefschetz_number(t) == lefschetz_reference(t)


def test_top_eigenvalue_is_entropy(corpus100):
    for t in corpus100:
        spec = induced_action(t, t.d_s).spectrum
        assert max(abs(z) for z in spec) == pytest.approx(math.exp(t.h_top), abs=1e-8)


# --- Jordan structure ------------------------------------------------------


def test_jordan_cat_trivial_blocks(cat):
    act = induced_action(cat, 1)
    blocks = jordan_structure(act)
    got = sorted((round(abs(z), 9), n) for z, n in blocks)
    assert got == [(round(1 / GAMMA, 9), 1), (round(GAMMA, 9), 1)]


def test_jordan_degree_zero(cat):
    act = induced_action(cat, 0)
    assert jordan_structure(act) == [(1 + 0j, 1)]


def test_jordan_repeated_eigenvalue_direct_sum(cat_sum):
    # sigma_2 of two cat blocks has eigenvalue 1 with multiplicity 4;
    # the exact rational rank of (C - I)^k is the oracle for the block sizes
    act = induced_action(cat_sum, 2)
    ones = [(z, n) for z, n in act.jordan_blocks if abs(z - 1) < 1e-6]
    assert len(ones) == 4 and all(n == 1 for _, n in ones)

    c = [[x for x in row] for row in act.matrix]
    n = len(c)
    shifted = [[c[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    r1 = rank_fraction(shifted)
    shifted2 = [
        [sum(shifted[i][t] * shifted[t][j] for t in range(n)) for j in range(n)]
        for i in range(n)
    ]
    r2 = rank_fraction(shifted2)
    assert n - r1 == 4  # geometric multiplicity 4 -> four blocks
    assert r2 == r1  # stabilizes immediately -> all blocks have size 1


def test_jordan_sizes_sum_to_dimension(corpus100):
    for t in corpus100[:30]:
        act = induced_action(t, t.d_s)
        assert sum(n for _, n in act.jordan_blocks) == act.dim


def test_jordan_rejects_bad_tol(cat):
    with pytest.raises(ValueError):
        jordan_structure(induced_action(cat, 1), tol=0.0)
