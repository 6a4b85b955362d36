"""Validation of hyperbolic toral automorphisms and their constants."""

import math

import pytest

from conftest import CAT, GAMMA, PLASTIC, PLASTIC_COMPANION
from toralmix import (
    NotHyperbolic,
    NotSquare,
    NotUnimodular,
    entropy,
    matrix_to_text,
    parse_matrix_text,
    validate_automorphism,
)


def test_cat_map_constants(cat):
    # closed-form roots of x^2 - 3x + 1
    assert cat.d_s == 1 and cat.d_u == 1
    assert cat.lam == pytest.approx(GAMMA, abs=1e-12)
    assert cat.h_top == pytest.approx(math.log(GAMMA), abs=1e-12)
    assert cat.det == 1
    assert not cat.orientation_caveat


def test_cat_map_reference_digits(cat):
    assert cat.lam == pytest.approx(2.6180340, abs=1e-6)
    assert cat.h_top == pytest.approx(0.9624237, abs=1e-6)


def test_parabolic_shear_rejected():
    with pytest.raises(NotHyperbolic):
        validate_automorphism([[1, 1], [0, 1]])


def test_non_unimodular_rejected():
    with pytest.raises(NotUnimodular):
        validate_automorphism([[2, 0], [0, 3]])


def test_non_square_rejected():
    with pytest.raises(NotSquare):
        validate_automorphism([[1, 0, 0], [0, 1, 0]])


def test_plastic_companion_constants(plastic):
    # oracle: numerical roots of x^3 - x - 1; complex pair has modulus rho^-1/2
    assert plastic.d_u == 1 and plastic.d_s == 2
    assert plastic.lam == pytest.approx(math.sqrt(PLASTIC), abs=1e-10)
    assert plastic.h_top == pytest.approx(math.log(PLASTIC), abs=1e-10)
    moduli = sorted(abs(z) for z in plastic.eigenvalues)
    assert moduli == pytest.approx(
        [PLASTIC ** -0.5, PLASTIC ** -0.5, PLASTIC], abs=1e-10
    )


def test_entropy_examples(cat, plastic):
    assert entropy(cat) == pytest.approx(0.9624237, abs=1e-6)
    assert entropy(plastic) == pytest.approx(math.log(PLASTIC), abs=1e-6)


def test_entropy_single_expanding_direction():
    # eigenvalues {g, 1/g}: h_top = log g
    t = validate_automorphism([[3, 1], [2, 1]])
    g = max(abs(z) for z in t.eigenvalues)
    assert entropy(t) == pytest.approx(math.log(g), abs=1e-12)


def test_eigenvalues_sorted_ascending_modulus(cat, plastic):
    for t in (cat, plastic):
        mods = [abs(z) for z in t.eigenvalues]
        assert mods == sorted(mods)


def test_validation_is_deterministic():
    a = validate_automorphism(CAT)
    b = validate_automorphism(CAT)
    assert a == b
    assert a.eigenvalues == b.eigenvalues


def test_orientation_caveat_flags():
    negated = validate_automorphism([[-2, -1], [-1, -1]])
    assert negated.orientation_caveat  # negative expanding eigenvalue
    sq = negated.squared()
    assert not sq.orientation_caveat
    assert sq.h_top == pytest.approx(2 * math.log(GAMMA), abs=1e-10)

    flip = validate_automorphism([[1, 1], [1, 0]])  # det = -1
    assert flip.det == -1 and flip.orientation_caveat


def test_tolerance_flag_rejects_near_circle(cat):
    # absurdly wide tolerance classifies even the cat map as non-hyperbolic
    with pytest.raises(NotHyperbolic):
        validate_automorphism(CAT, tol=2.0)
    with pytest.raises(ValueError):
        validate_automorphism(CAT, tol=-1.0)


def test_matrix_text_round_trip():
    text = matrix_to_text(PLASTIC_COMPANION)
    assert parse_matrix_text(text) == PLASTIC_COMPANION
    assert text.splitlines()[0] == "3"


# --- corpus invariants -----------------------------------------------------


def test_corpus_entropy_two_sided(corpus100):
    for t in corpus100:
        up = sum(math.log(abs(z)) for z in t.eigenvalues if abs(z) > 1)
        down = -sum(math.log(abs(z)) for z in t.eigenvalues if abs(z) < 1)
        assert abs(up - down) < 1e-10


def test_corpus_eigenvalue_product_unimodular(corpus100):
    for t in corpus100:
        prod = 1.0 + 0j
        for z in t.eigenvalues:
            prod *= z
        assert abs(abs(prod) - 1.0) < 1e-10


def test_corpus_lambda_consistency(corpus100):
    # every modulus is >= lam or <= 1/lam
    for t in corpus100:
        for z in t.eigenvalues:
            r = abs(z)
            assert r >= t.lam - 1e-12 or r <= 1 / t.lam + 1e-12
        assert t.lam > 1


def test_corpus_entropy_dominates_stable_contraction(corpus100):
    for t in corpus100:
        assert math.exp(t.h_top) * t.lam ** (-t.d_s) >= 1 - 1e-10


def test_corpus_dimension_split(corpus100):
    for t in corpus100:
        assert t.d_s + t.d_u == t.dim and t.d_s >= 1 and t.d_u >= 1
