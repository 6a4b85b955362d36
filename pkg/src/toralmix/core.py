"""Validation of integer matrices as hyperbolic toral automorphisms.

A matrix M in GL_d(Z) with |det M| = 1 and no eigenvalue on the unit circle
induces an Anosov automorphism of the d-torus. This module checks those
conditions (determinant exactly, hyperbolicity numerically with a tolerance)
and extracts the constants the rest of the package runs on: the eigenvalues,
the stable/unstable dimensions, the minimal hyperbolicity factor, and the
topological entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotHyperbolic, NotSquare, NotUnimodular
from .exact import (
    char_poly_int,
    det_int,
    inverse_unimodular,
    poly_deriv,
    poly_eval_complex,
    squarefree_factors,
)

#: Default tolerance for the unit-circle (hyperbolicity) test.
UNIT_CIRCLE_TOL = 1e-8

#: Imaginary parts below this (relative) size classify a root as real.
_REAL_AXIS_TOL = 1e-9


@dataclass(frozen=True)
class ToralAutomorphism:
    """A validated hyperbolic toral automorphism x -> Mx mod 1.

    Fields:
      matrix        the defining integer matrix M, row tuples
      det           exact determinant, +1 or -1
      eigenvalues   eigenvalues of M sorted by ascending modulus
      d_s / d_u     stable / unstable dimensions (#moduli < 1 / > 1)
      lam           minimal hyperbolicity factor > 1
      h_top         topological entropy, natural log units
      orientation_caveat  True when det = -1 or some eigenvalue is a
                          negative real; the spectral identities below then
                          hold for moduli only (analyze .squared() to recover
                          the orientation-preserving statements)
    """

    matrix: tuple[tuple[int, ...], ...]
    det: int
    eigenvalues: tuple[complex, ...]
    d_s: int
    d_u: int
    lam: float
    h_top: float
    orientation_caveat: bool
    unit_circle_tol: float

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def inverse_matrix(self) -> list[list[int]]:
        """Exact integer inverse of the defining matrix."""
        return inverse_unimodular(self.matrix)

    def squared(self) -> "ToralAutomorphism":
        """The automorphism induced by M^2 (orientation-preserving)."""
        m = [list(row) for row in self.matrix]
        n = len(m)
        sq = [[sum(m[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        return validate_automorphism(sq, tol=self.unit_circle_tol)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)


def _as_int_rows(m) -> list[list[int]]:
    rows = [list(r) for r in m]
    d = len(rows)
    if d == 0 or any(len(r) != d for r in rows):
        raise NotSquare(f"expected a square matrix, got rows of lengths {[len(r) for r in rows]}")
    out = []
    for r in rows:
        line = []
        for x in r:
            xi = int(x)
            if xi != x:
                raise ValueError(f"matrix entry {x!r} is not an integer")
            line.append(xi)
        out.append(line)
    return out


def _eigenvalues_exact_charpoly(rows: list[list[int]]) -> list[complex]:
    """Eigenvalues via the exact characteristic polynomial.

    The polynomial is factored into exact squarefree parts (so repeated
    eigenvalues never degrade root accuracy), the roots of each part are
    found numerically, and each root gets one Newton step on the exact
    polynomial to remove dense-solver drift.
    """
    coeffs = char_poly_int(rows)
    eigs: list[complex] = []
    for f, mult in squarefree_factors(coeffs):
        fl = np.array([float(c) for c in f])
        fp = poly_deriv(f)
        for r in np.roots(fl):
            z = complex(r)
            dv = poly_eval_complex(fp, z)
            if abs(dv) > 0:
                z = z - poly_eval_complex(f, z) / dv
            if abs(z.imag) <= _REAL_AXIS_TOL * (1 + abs(z)):
                z = complex(z.real, 0.0)
            eigs.extend([z] * mult)
    eigs.sort(key=lambda z: (abs(z), math.atan2(z.imag, z.real)))
    return eigs


def validate_automorphism(m, tol: float = UNIT_CIRCLE_TOL) -> ToralAutomorphism:
    """Validate an integer matrix as a hyperbolic toral automorphism.

    Parameters
    ----------
    m : array-like of int, square
    tol : unit-circle tolerance; the matrix is rejected as NotHyperbolic when
        any eigenvalue modulus lies within tol of 1.

    Raises NotSquare, NotUnimodular or NotHyperbolic.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    rows = _as_int_rows(m)
    det = det_int(rows)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant is {det}, expected +1 or -1")
    eigs = _eigenvalues_exact_charpoly(rows)
    moduli = [abs(z) for z in eigs]
    closest = min(abs(r - 1.0) for r in moduli)
    if closest < tol:
        bad = min(moduli, key=lambda r: abs(r - 1.0))
        raise NotHyperbolic(
            f"eigenvalue modulus {bad!r} is within {tol} of the unit circle"
        )
    d_s = sum(1 for r in moduli if r < 1.0)
    d_u = sum(1 for r in moduli if r > 1.0)
    assert d_s + d_u == len(rows) and d_s >= 1 and d_u >= 1
    lam = min(
        min(r for r in moduli if r > 1.0),
        min(1.0 / r for r in moduli if r < 1.0),
    )
    h_top = float(sum(math.log(r) for r in moduli if r > 1.0))
    negative_real = any(z.imag == 0.0 and z.real < 0.0 for z in eigs)
    return ToralAutomorphism(
        matrix=tuple(tuple(r) for r in rows),
        det=det,
        eigenvalues=tuple(eigs),
        d_s=d_s,
        d_u=d_u,
        lam=lam,
        h_top=h_top,
        orientation_caveat=(det == -1 or negative_real),
        unit_circle_tol=tol,
    )


def entropy(t: ToralAutomorphism) -> float:
    """Topological entropy: sum of log-moduli over expanding eigenvalues.

    By unimodularity this equals minus the sum over contracting eigenvalues;
    both sides are recomputed here from the stored spectrum.
    """
    up = sum(math.log(abs(z)) for z in t.eigenvalues if abs(z) > 1.0)
    down = -sum(math.log(abs(z)) for z in t.eigenvalues if abs(z) < 1.0)
    assert abs(up - down) < 1e-10, "entropy sides disagree; validation is broken"
    return float(up)


def parse_matrix_text(text: str) -> list[list[int]]:
    """Parse the plain-text matrix format: first line d, then d rows of d ints."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty matrix input")
    d = int(tokens[0])
    vals = tokens[1:]
    if len(vals) != d * d:
        raise ValueError(f"expected {d * d} entries after the dimension line, got {len(vals)}")
    it = iter(int(v) for v in vals)
    return [[next(it) for _ in range(d)] for _ in range(d)]


def matrix_to_text(rows) -> str:
    """Canonical plain-text serialization (inverse of parse_matrix_text)."""
    rows = [list(r) for r in rows]
    lines = [str(len(rows))]
    lines += [" ".join(str(int(x)) for x in r) for r in rows]
    return "\n".join(lines) + "\n"


def random_unimodular(rng: np.random.Generator, dim: int, shears: int | None = None,
                      max_coeff: int = 3) -> list[list[int]]:
    """Random element of GL_dim(Z) built from integer shears and swaps."""
    a = np.eye(dim, dtype=object)
    if shears is None:
        shears = 3 * dim
    for _ in range(shears):
        i, j = rng.integers(0, dim, size=2)
        if i == j:
            continue
        c = int(rng.integers(-max_coeff, max_coeff + 1))
        e = np.eye(dim, dtype=object)
        e[i, j] = c
        a = e @ a
    if dim >= 2 and rng.integers(0, 2):
        a[[0, 1], :] = a[[1, 0], :]
    return [[int(x) for x in row] for row in a]


def random_hyperbolic(rng: np.random.Generator, dim: int, tol: float = UNIT_CIRCLE_TOL,
                      max_entry: int = 40, max_tries: int = 500) -> ToralAutomorphism:
    """Draw a random hyperbolic unimodular matrix; retries until hyperbolic.

    max_entry rejects badly scaled shear products, keeping the compound
    spectra small enough that absolute 1e-8 comparisons stay meaningful.
    """
    for _ in range(max_tries):
        rows = random_unimodular(rng, dim, max_coeff=2)
        if max(abs(x) for row in rows for x in row) > max_entry:
            continue
        try:
            return validate_automorphism(rows, tol=tol)
        except NotHyperbolic:
            continue
    raise RuntimeError(f"no hyperbolic matrix found in {max_tries} tries (dim={dim})")
