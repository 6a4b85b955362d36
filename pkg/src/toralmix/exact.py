"""Exact integer / rational linear algebra for small matrices.

Everything in this module avoids floating point entirely: determinants and
compound matrices feed the cohomology action, the characteristic polynomial
feeds the eigenvalue pipeline, and rational ranks serve as test oracles.
Matrices are plain lists of lists of ``int`` or ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def det_int(rows) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def inverse_unimodular(rows) -> list[list[int]]:
    """Exact inverse of an integer matrix with determinant +-1.

    The inverse equals det(M) * adjugate(M), which is again integral.
    Raises ValueError when |det| != 1.
    """
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    d = det_int(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[a[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof[i][j] = (-1) ** (i + j) * det_int(minor)
    # inverse = adjugate / det = cof^T * det  (det is +-1)
    return [[d * cof[j][i] for j in range(n)] for i in range(n)]


def compound_int(rows, l: int) -> list[list[int]]:
    """l-th compound (exterior power) of an integer matrix.

    Rows and columns are indexed by the size-l subsets of {0,...,n-1} in
    lexicographic order; entry (I, J) is the minor with rows I, columns J.
    """
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    subsets = list(combinations(range(n), l))
    out = []
    for rws in subsets:
        out.append([det_int([[a[i][j] for j in cols] for i in rws]) for cols in subsets])
    return out


def subset_index_order(n: int, l: int) -> list[tuple[int, ...]]:
    """Lexicographic size-l index subsets, matching compound_int ordering."""
    return list(combinations(range(n), l))


def char_poly_int(rows) -> list[int]:
    """Characteristic polynomial of an integer matrix, exact coefficients.

    Returns [1, c1, ..., cn] with p(x) = x^n + c1 x^(n-1) + ... + cn,
    computed by the Faddeev-LeVerrier recursion over rationals.
    """
    n = len(rows)
    m = [[Fraction(int(x)) for x in row] for row in rows]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]
    b = [row[:] for row in ident]
    for k in range(1, n + 1):
        # B_k = M @ (B_{k-1} + c_{k-1} I); with B_0 = I and c_0 = 1 folded in
        if k > 1:
            for i in range(n):
                b[i][i] += coeffs[-1]
        b = [[sum(m[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        ck = -sum(b[i][i] for i in range(n)) / k
        coeffs.append(ck)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("characteristic polynomial of an integer matrix must be integral")
        out.append(int(c))
    return out


def rank_fraction(rows) -> int:
    """Exact rank of a rational matrix by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    rank = 0
    row = 0
    for col in range(nc):
        piv = next((r for r in range(row, nr) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(nr):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


# ---------------------------------------------------------------------------
# Polynomials over Fraction, coefficients highest degree first.


def poly_trim(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def poly_deriv(p):
    n = len(p) - 1
    if n == 0:
        return [Fraction(0)]
    return [c * (n - i) for i, c in enumerate(p[:-1])]


def poly_divmod(num, den):
    num = [Fraction(c) for c in poly_trim(num)]
    den = [Fraction(c) for c in poly_trim(den)]
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    r = num[:]
    while len(r) >= len(den) and poly_trim(r) != [0]:
        shift = len(r) - len(den)
        f = r[0] / den[0]
        q[len(q) - 1 - shift] = f
        r = [a - f * b for a, b in zip(r, den + [Fraction(0)] * shift)]
        r = r[1:] if r else [Fraction(0)]
        if not r:
            r = [Fraction(0)]
    return poly_trim(q), poly_trim(r)


def poly_gcd(p, q):
    """Monic gcd of two rational polynomials (Euclid)."""
    a = [Fraction(c) for c in poly_trim(p)]
    b = [Fraction(c) for c in poly_trim(q)]
    while poly_trim(b) != [0]:
        _, r = poly_divmod(a, b)
        a, b = b, r
    a = poly_trim(a)
    if a[0] != 0:
        a = [c / a[0] for c in a]
    return a


def squarefree_factors(p) -> list[tuple[list[Fraction], int]]:
    """Yun squarefree factorization: p = prod f_i^i with the f_i squarefree.

    Returns [(f_i, i)] skipping trivial factors; constants normalized so the
    factors are monic. Input may have integer coefficients.
    """
    p = [Fraction(c) for c in poly_trim(p)]
    if len(p) == 1:
        return []
    p = [c / p[0] for c in p]
    dp = poly_deriv(p)
    g = poly_gcd(p, dp)
    if len(g) == 1:
        return [(p, 1)]
    w, _ = poly_divmod(p, g)
    y, _ = poly_divmod(dp, g)
    z = _poly_sub(y, poly_deriv(w))
    out = []
    i = 1
    while len(w) > 1:
        gi = poly_gcd(w, z)
        if len(gi) > 1:
            out.append((gi, i))
        w, _ = poly_divmod(w, gi)
        y, _ = poly_divmod(z, gi)
        z = _poly_sub(y, poly_deriv(w))
        i += 1
    return out


def _poly_sub(a, b):
    la, lb = len(a), len(b)
    n = max(la, lb)
    a = [Fraction(0)] * (n - la) + list(a)
    b = [Fraction(0)] * (n - lb) + list(b)
    return poly_trim([x - y for x, y in zip(a, b)])


def poly_eval_complex(p, z: complex) -> complex:
    """Horner evaluation of an exact polynomial at a complex point."""
    acc = 0j
    for c in p:
        acc = acc * z + complex(c)
    return acc
