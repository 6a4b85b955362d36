"""The exact integer/rational kernel, checked against numpy and by hand."""

from fractions import Fraction

import numpy as np
import pytest

from toralmix.exact import (
    char_poly_int,
    compound_int,
    det_int,
    inverse_unimodular,
    poly_divmod,
    poly_gcd,
    rank_fraction,
    squarefree_factors,
)


def test_det_matches_numpy_on_random_int_matrices():
    rng = np.random.default_rng(3)
    for _ in range(50):
        d = int(rng.integers(1, 6))
        m = rng.integers(-4, 5, size=(d, d))
        assert det_int(m.tolist()) == round(float(np.linalg.det(m)))


def test_det_known_values():
    assert det_int([[2, 1], [1, 1]]) == 1
    assert det_int([[2, 0], [0, 3]]) == 6
    assert det_int([[0, 0], [0, 0]]) == 0


def test_inverse_unimodular_cat():
    assert inverse_unimodular([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]


def test_inverse_unimodular_round_trips():
    rng = np.random.default_rng(5)
    for _ in range(20):
        d = int(rng.integers(2, 5))
        m = np.eye(d, dtype=np.int64)
        for _ in range(6):
            i, j = rng.integers(0, d, 2)
            if i != j:
                e = np.eye(d, dtype=np.int64)
                e[i, j] = int(rng.integers(-2, 3))
                m = e @ m
        inv = np.array(inverse_unimodular(m.tolist()))
        assert np.array_equal(m @ inv, np.eye(d, dtype=np.int64))


def test_inverse_rejects_non_unimodular():
    with pytest.raises(ValueError):
        inverse_unimodular([[2, 0], [0, 3]])


def test_char_poly_cat():
    # x^2 - 3x + 1
    assert char_poly_int([[2, 1], [1, 1]]) == [1, -3, 1]


def test_char_poly_matches_numpy():
    rng = np.random.default_rng(11)
    for _ in range(20):
        d = int(rng.integers(2, 6))
        m = rng.integers(-3, 4, size=(d, d))
        ours = np.array(char_poly_int(m.tolist()), dtype=float)
        theirs = np.poly(m.astype(float))
        assert np.allclose(ours, theirs, atol=1e-6 * max(1.0, np.abs(theirs).max()))


def test_compound_dimensions_and_edges():
    m = [[2, 1], [1, 1]]
    assert compound_int(m, 0) == [[1]]
    assert compound_int(m, 1) == m
    assert compound_int(m, 2) == [[1]]  # the determinant


def test_compound_multiplicativity():
    # C_l(AB) = C_l(A) C_l(B), a classic compound identity
    rng = np.random.default_rng(7)
    a = rng.integers(-3, 4, size=(4, 4)).tolist()
    b = rng.integers(-3, 4, size=(4, 4)).tolist()
    ab = (np.array(a) @ np.array(b)).tolist()
    ca = np.array(compound_int(a, 2))
    cb = np.array(compound_int(b, 2))
    assert np.array_equal(np.array(compound_int(ab, 2)), ca @ cb)


def test_rank_fraction():
    assert rank_fraction([[1, 2], [2, 4]]) == 1
    assert rank_fraction([[1, 0], [0, 1]]) == 2
    assert rank_fraction([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]) == 1  # det = 0
    assert rank_fraction([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(2, 1)]]) == 2
    assert rank_fraction([[0, 0], [0, 0]]) == 0


def test_poly_divmod_exact():
    # (x^2 - 3x + 1)(x - 2) = x^3 - 5x^2 + 7x - 2
    q, r = poly_divmod([1, -5, 7, -2], [1, -3, 1])
    assert q == [1, -2] and r == [0]


def test_poly_gcd_and_squarefree():
    # p = (x^2 - 3x + 1)^2 has gcd(p, p') = x^2 - 3x + 1
    p = np.polymul([1, -3, 1], [1, -3, 1]).tolist()
    g = poly_gcd(p, [4, -18, 22, -6])  # p' up to scale
    assert [float(c) for c in g] == [1.0, -3.0, 1.0]
    factors = squarefree_factors(p)
    assert len(factors) == 1
    f, mult = factors[0]
    assert mult == 2 and [float(c) for c in f] == [1.0, -3.0, 1.0]


def test_squarefree_mixed_multiplicities():
    # (x - 1)(x - 2)^2 -> factors (x-1, 1), (x-2, 2)
    p = np.polymul([1, -1], np.polymul([1, -2], [1, -2])).tolist()
    factors = squarefree_factors(p)
    got = sorted(((tuple(float(c) for c in f), m) for f, m in factors), key=lambda x: x[1])
    assert got == [((1.0, -1.0), 1), ((1.0, -2.0), 2)]
