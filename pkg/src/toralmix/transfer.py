"""Truncated pushforward operator on Fourier modes, plus Ulam discretization.

Composition with f^-1 sends the character exp(2 pi i k.x) to the character at
mode Phi(k) = (M^-1)^T k, so on the modes {|k|_inf <= K} the pushforward is a
0/1 column map: each column k has a single 1 at row Phi(k) when the image
stays inside the cutoff, and is zero otherwise (the mass escapes). For a
hyperbolic matrix every nonzero mode escapes eventually, which makes the
truncation nilpotent away from the constants and the computed resonance set
exactly {1}.

The Ulam path is exploratory: it builds the usual cell-transition stochastic
matrix for an arbitrary torus map from seeded Monte-Carlo samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .core import ToralAutomorphism
from .errors import CapExceeded

#: Above this dimension, spectra of structural truncations are computed by
#: cycle detection and Ulam spectra by iterative solvers.
DENSE_EIG_CAP = 4096


@dataclass
class OperatorTruncation:
    """Pushforward restricted to Fourier modes with |k|_inf <= cutoff."""

    cutoff: int
    torus_dim: int
    dim: int
    matrix: sp.csc_matrix
    permutation_with_escape: bool
    escaped_modes: int
    nilpotency_index: int
    spectrum: list[complex] = field(default_factory=list)

    def mode_of_index(self, i: int) -> tuple[int, ...]:
        k = 2 * self.cutoff + 1
        out = []
        for _ in range(self.torus_dim):
            out.append(i % k - self.cutoff)
            i //= k
        return tuple(reversed(out))


def _mode_table(kmax: int, d: int) -> np.ndarray:
    """All integer vectors with |k|_inf <= kmax, lexicographic order."""
    grids = np.meshgrid(*([np.arange(-kmax, kmax + 1)] * d), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _mode_indices(modes: np.ndarray, kmax: int) -> np.ndarray:
    side = 2 * kmax + 1
    idx = np.zeros(len(modes), dtype=np.int64)
    for c in range(modes.shape[1]):
        idx = idx * side + (modes[:, c] + kmax)
    return idx


def pushforward_matrix(t: ToralAutomorphism, cutoff: int,
                       cap: int = 1_000_000) -> OperatorTruncation:
    """Assemble the truncated pushforward of a linear automorphism.

    Entry (k', k) = 1 iff k' = (M^-1)^T k and |k'|_inf <= cutoff; columns
    whose image leaves the cutoff are zero. Raises CapExceeded when
    (2*cutoff+1)^d exceeds cap.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    d = t.dim
    dim = (2 * cutoff + 1) ** d
    if dim > cap:
        raise CapExceeded(f"(2K+1)^d = {dim} exceeds cap {cap}")
    phi = np.array(t.inverse_matrix(), dtype=np.int64).T
    modes = _mode_table(cutoff, d)
    images = modes @ phi.T
    inside = np.max(np.abs(images), axis=1) <= cutoff
    cols = _mode_indices(modes[inside], cutoff)
    rows = _mode_indices(images[inside], cutoff)
    mat = sp.csc_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(dim, dim), dtype=float
    )
    nilp = _escape_depths(images, inside, modes, cutoff)
    op = OperatorTruncation(
        cutoff=cutoff,
        torus_dim=d,
        dim=dim,
        matrix=mat,
        permutation_with_escape=True,
        escaped_modes=int(np.sum(~inside)),
        nilpotency_index=nilp,
    )
    op.spectrum = truncated_spectrum(op)
    return op


def _escape_depths(images, inside, modes, cutoff) -> int:
    """Longest iterate count before a nonzero mode leaves the cutoff."""
    index_of = {tuple(m): i for i, m in enumerate(modes)}
    next_idx = np.full(len(modes), -1, dtype=np.int64)
    for i in np.nonzero(inside)[0]:
        next_idx[i] = index_of[tuple(images[i])]
    depth = {}
    zero_idx = index_of[tuple([0] * modes.shape[1])]
    longest = 0
    for start in range(len(modes)):
        if start == zero_idx:
            continue
        path = []
        on_path = set()
        i = start
        while i >= 0 and i != zero_idx and i not in depth:
            if i in on_path:
                raise AssertionError("cycle among nonzero modes; matrix is not hyperbolic")
            path.append(i)
            on_path.add(i)
            i = next_idx[i]
        base = 0 if i < 0 else (0 if i == zero_idx else depth[i])
        for j in reversed(path):
            base += 1
            depth[j] = base
        if path:
            longest = max(longest, depth[path[0]])
    return longest


def mode_cycles(op: OperatorTruncation) -> list[list[tuple[int, ...]]]:
    """Cycles of the retained mode graph, excluding the fixed zero mode.

    For hyperbolic linear maps this must be empty: every nonzero integer
    vector eventually escapes any fixed cutoff. Verified by traversal.
    """
    mat = op.matrix.tocsc()
    nxt = np.full(op.dim, -1, dtype=np.int64)
    for col in range(op.dim):
        start, end = mat.indptr[col], mat.indptr[col + 1]
        if end > start:
            nxt[col] = mat.indices[start]
    zero_index = (op.dim - 1) // 2
    state = np.zeros(op.dim, dtype=np.int8)  # 0 new, 1 in progress, 2 done
    cycles = []
    for s in range(op.dim):
        if s == zero_index or state[s]:
            continue
        path = []
        i = s
        while i >= 0 and i != zero_index and state[i] == 0:
            state[i] = 1
            path.append(i)
            i = nxt[i]
        if i >= 0 and i != zero_index and state[i] == 1:
            cyc = path[path.index(i):]
            cycles.append([op.mode_of_index(j) for j in cyc])
        for j in path:
            state[j] = 2
    return cycles


def truncated_spectrum(op: OperatorTruncation, floor: float = 1e-10) -> list[complex]:
    """Eigenvalues of the truncation above a floor, descending modulus.

    Dense eigensolve up to DENSE_EIG_CAP; above that, permutation-with-escape
    matrices are resolved structurally (each cycle of length p in the mode
    graph contributes the p-th roots of unity, everything else is nilpotent).
    """
    if floor < 0:
        raise ValueError("floor must be >= 0")
    if op.dim <= DENSE_EIG_CAP:
        eigs = np.linalg.eigvals(op.matrix.toarray())
    elif op.permutation_with_escape:
        eigs = [1.0 + 0.0j]  # the fixed zero mode
        for cyc in mode_cycles(op):
            p = len(cyc)
            eigs.extend(np.exp(2j * np.pi * np.arange(p) / p))
        eigs = np.array(eigs + [0.0] * (op.dim - len(eigs)))
    else:
        raise CapExceeded(
            f"dense eigensolve capped at {DENSE_EIG_CAP}, matrix has dim {op.dim}"
        )
    # floor = 0 keeps everything, including the exact zeros of the nilpotent part
    eigs = [complex(z) for z in eigs if floor == 0 or abs(z) > floor]
    eigs.sort(key=lambda z: (-round(abs(z), 12), round(math.atan2(z.imag, z.real), 12)))
    return eigs


def export_coordinate_text(op: OperatorTruncation) -> str:
    """Sparse matrix in coordinate text form: header 'rows cols nnz', then
    one 'row col re im' line per entry."""
    coo = op.matrix.tocoo()
    lines = [f"{op.dim} {op.dim} {coo.nnz}"]
    order = np.lexsort((coo.col, coo.row))
    for i in order:
        v = complex(coo.data[i])
        lines.append(f"{coo.row[i]} {coo.col[i]} {v.real:.17g} {v.imag:.17g}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Ulam discretization (exploratory; no resonance claims for nonlinear maps).


def linear_torus_map(matrix) -> "callable":
    """The map x -> Mx mod 1 acting on arrays of points, one point per row."""
    m = np.asarray(matrix, dtype=float)

    def apply(points: np.ndarray) -> np.ndarray:
        return (points @ m.T) % 1.0

    return apply


def perturbed_cat_map(matrix, eps: float) -> "callable":
    """x -> Mx + eps*(sin(2 pi x_d), 0, ..., 0) mod 1."""
    m = np.asarray(matrix, dtype=float)

    def apply(points: np.ndarray) -> np.ndarray:
        out = points @ m.T
        out[:, 0] += eps * np.sin(2 * np.pi * points[:, -1])
        return out % 1.0

    return apply


def ulam_discretize(map_fn, n_cells: int, samples_per_cell: int, seed: int,
                    dim: int = 2) -> sp.csc_matrix:
    """Column-stochastic Ulam matrix of a torus map on an n_cells^dim grid.

    Entry (i, j) is the fraction of Monte-Carlo points of cell j that land in
    cell i. Each cell draws from its own seed-derived RNG stream, so the
    result is reproducible independent of evaluation order.

    map_fn must be an invertible self-map of the torus (non-invertible
    endomorphisms like the doubling map are out of scope here); only
    Lebesgue-preserving maps give a discretization of the operator the
    mixing bounds speak about.
    """
    if n_cells < 2:
        raise ValueError("need at least 2 cells per axis")
    total = n_cells ** dim
    cells = np.indices([n_cells] * dim).reshape(dim, -1).T
    rows = []
    cols = []
    vals = []
    for j, cell in enumerate(cells):
        rng = np.random.default_rng([seed, j])
        pts = (cell + rng.random((samples_per_cell, dim))) / n_cells
        img = map_fn(pts) % 1.0
        tgt = np.minimum((img * n_cells).astype(np.int64), n_cells - 1)
        flat = np.zeros(len(tgt), dtype=np.int64)
        for c in range(dim):
            flat = flat * n_cells + tgt[:, c]
        counts = np.bincount(flat, minlength=total)
        nz = np.nonzero(counts)[0]
        rows.extend(nz.tolist())
        cols.extend([j] * len(nz))
        vals.extend((counts[nz] / samples_per_cell).tolist())
    return sp.csc_matrix((vals, (rows, cols)), shape=(total, total))


def stochastic_spectrum(p: sp.spmatrix, k: int = 6) -> list[complex]:
    """Top eigenvalues of a stochastic matrix, descending modulus.

    Dense below DENSE_EIG_CAP, otherwise restarted Arnoldi on the sparse
    matrix (k largest by modulus).
    """
    n = p.shape[0]
    if n <= DENSE_EIG_CAP:
        eigs = np.linalg.eigvals(p.toarray())
        eigs = sorted(eigs, key=lambda z: -abs(z))[: max(k, 1)]
    else:
        eigs = spla.eigs(p.astype(float), k=k, which="LM", return_eigenvectors=False)
        eigs = sorted(eigs, key=lambda z: -abs(z))
    return [complex(z) for z in eigs]
