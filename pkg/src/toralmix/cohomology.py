"""The pushforward action on de Rham cohomology of the torus.

For a toral automorphism with matrix M, the action on degree-1 cohomology is
represented by the integer matrix M^-1 in the basis [dx_1], ..., [dx_d]; the
action on degree l is its l-th compound matrix, whose eigenvalues are the
l-fold products of distinct eigenvalues of M^-1. Compound entries are exact
integers (|det| = 1), so the only numerical step is the eigensolve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import ToralAutomorphism
from .errors import DegreeOutOfRange, IllConditioned
from .exact import compound_int, det_int

#: Default relative tolerance for numerical rank decisions.
RANK_TOL = 1e-9


@dataclass(frozen=True)
class CohomologyAction:
    """Action on degree-l cohomology: exact matrix, spectrum, Jordan data.

    matrix entries are Fractions (integers here, kept rational for the JSON
    schema); spectrum is sorted by descending modulus then ascending
    argument; jordan_blocks lists one (eigenvalue, size) pair per block.
    """

    degree: int
    matrix: tuple[tuple[Fraction, ...], ...]
    spectrum: tuple[complex, ...]
    jordan_blocks: tuple[tuple[complex, int], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.matrix])


def _spectral_sort(values) -> list[complex]:
    # descending modulus, then ascending argument; rounded keys keep ties stable
    return sorted(
        (complex(z) for z in values),
        key=lambda z: (-round(abs(z), 12), round(math.atan2(z.imag, z.real), 12)),
    )


def induced_action(t: ToralAutomorphism, l: int, rank_tol: float = RANK_TOL) -> CohomologyAction:
    """Compute the degree-l cohomology action of a toral automorphism.

    Returns the l-th compound of M^-1 with lexicographic subset ordering,
    its numerically computed spectrum, and the Jordan block structure.
    """
    d = t.dim
    if not 0 <= l <= d:
        raise DegreeOutOfRange(f"degree {l} outside [0, {d}]")
    comp = compound_int(t.inverse_matrix(), l)
    arr = np.array(comp, dtype=float)
    spectrum = _spectral_sort(np.linalg.eigvals(arr))
    blocks = _jordan_blocks(arr, spectrum, rank_tol)
    return CohomologyAction(
        degree=l,
        matrix=tuple(tuple(Fraction(x) for x in row) for row in comp),
        spectrum=tuple(spectrum),
        jordan_blocks=tuple(blocks),
    )


def spectrum_products_oracle(eigs, l: int) -> list[complex]:
    """All l-fold products of distinct-index eigenvalues (the spectrum oracle).

    This brute-force enumeration is the independent reference against which
    compound-matrix spectra are validated; keep it free of compound code.
    """
    eigs = [complex(z) for z in eigs]
    if not 0 <= l <= len(eigs):
        raise DegreeOutOfRange(f"degree {l} outside [0, {len(eigs)}]")
    out = []
    for idx in combinations(range(len(eigs)), l):
        p = 1.0 + 0.0j
        for i in idx:
            p *= eigs[i]
        out.append(p)
    return _spectral_sort(out)


def eigen_match_distance(a, b) -> float:
    """Optimal-assignment multiset distance between two eigenvalue lists.

    Minimizes the total |a_i - b_pi(i)| over permutations and returns the
    largest matched difference.
    """
    a = [complex(z) for z in a]
    b = [complex(z) for z in b]
    if len(a) != len(b):
        raise ValueError(f"multisets of different size: {len(a)} vs {len(b)}")
    if not a:
        return 0.0
    cost = np.abs(np.subtract.outer(np.array(a), np.array(b)))
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def _numerical_rank(mat: np.ndarray, tol: float) -> int:
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    thr = tol * s[0]
    rank = int(np.sum(s > thr))
    if 0 < rank < s.size:
        hi, lo = s[rank - 1], s[rank]
        if lo > 0 and hi / lo < 10.0:
            raise IllConditioned(
                f"singular values {hi:.3e} and {lo:.3e} straddle the rank "
                f"threshold {thr:.3e} within a factor 10"
            )
    return rank


def _cluster(values: list[complex], radius: float) -> list[tuple[complex, int]]:
    clusters: list[list[complex]] = []
    for z in values:
        for c in clusters:
            center = sum(c) / len(c)
            if abs(z - center) <= radius:
                c.append(z)
                break
        else:
            clusters.append([z])
    return [(sum(c) / len(c), len(c)) for c in clusters]


def _jordan_blocks(arr: np.ndarray, spectrum: list[complex], tol: float) -> list[tuple[complex, int]]:
    n = arr.shape[0]
    if n == 0:
        return []
    max_mod = max(abs(z) for z in spectrum)
    radius = max(tol, 1e-7 * max_mod)
    blocks: list[tuple[complex, int]] = []
    for center, mult in _cluster(list(spectrum), radius):
        if mult == 1:
            blocks.append((center, 1))
            continue
        shifted = arr.astype(complex) - center * np.eye(n)
        ranks = [n]
        power = np.eye(n, dtype=complex)
        for _ in range(mult):
            power = power @ shifted
            ranks.append(_numerical_rank(power, tol))
        if n - ranks[-1] != mult:
            raise IllConditioned(
                f"generalized eigenspace of {center} has numerical dimension "
                f"{n - ranks[-1]}, expected algebraic multiplicity {mult}"
            )
        ranks.append(ranks[-1])
        for k in range(1, mult + 1):
            exactly_k = (ranks[k - 1] - ranks[k]) - (ranks[k] - ranks[k + 1])
            if exactly_k < 0:
                raise IllConditioned(
                    f"non-monotone rank sequence {ranks[:-1]} for eigenvalue {center}"
                )
            blocks.extend([(center, k)] * exactly_k)
    blocks.sort(key=lambda zn: (-round(abs(zn[0]), 12),
                                round(math.atan2(zn[0].imag, zn[0].real), 12), -zn[1]))
    assert sum(k for _, k in blocks) == n
    return blocks


def jordan_structure(action: CohomologyAction, tol: float = RANK_TOL) -> list[tuple[complex, int]]:
    """Jordan block structure of a cohomology action at a given rank tolerance.

    Eigenvalues are clustered within max(tol, 1e-7 * max modulus); the block
    sizes come from the rank sequence of (M - mu I)^k. Raises IllConditioned
    when a rank decision is ambiguous at the tolerance.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    return _jordan_blocks(action.as_array(), list(action.spectrum), tol)


def lefschetz_number(t: ToralAutomorphism) -> Fraction:
    """Alternating sum of compound traces, exactly; equals det(I - M^-1)."""
    inv = t.inverse_matrix()
    total = Fraction(0)
    for l in range(t.dim + 1):
        comp = compound_int(inv, l)
        total += (-1) ** l * sum(comp[i][i] for i in range(len(comp)))
    return total


def lefschetz_reference(t: ToralAutomorphism) -> Fraction:
    """det(I - M^-1) in exact integer arithmetic (the Lefschetz oracle)."""
    inv = t.inverse_matrix()
    n = len(inv)
    mat = [[(1 if i == j else 0) - inv[i][j] for j in range(n)] for i in range(n)]
    return Fraction(det_int(mat))
