"""Resonance annulus content, mixing bound, and per-degree spectral bounds.

The headline quantities for a hyperbolic toral automorphism: eigenvalues of
the degree-d_s cohomology action above the inner radius lambda^-1 e^{h_top}
give the resonance set; nu = max(|Lambda_2|, lambda^-1 e^{h_top}) bounds the
correlation decay by nu^n e^{-n h_top}; and every degree-l spectrum is bounded
by lambda^-|d_s - l| e^{h_top}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cohomology import RANK_TOL, CohomologyAction, induced_action
from .core import ToralAutomorphism
from .errors import BoundViolated


@dataclass(frozen=True)
class ResonanceReport:
    """Annulus resonances of a toral automorphism; see resonance_report."""

    h_top: float
    lam: float
    annulus_inner: float
    resonances: tuple[tuple[complex, int], ...]  # (Lambda_i, N_i), desc modulus
    rescaled: tuple[complex, ...]  # Lambda_i e^{-h_top}
    nu: float
    decay_rate_bound: float
    asymptotics_terms: tuple[tuple[complex, int], ...]  # (base, max power k)
    lambda2_modulus: float  # second largest modulus of the full d_s spectrum

    @property
    def lambda1(self) -> complex:
        return self.resonances[0][0]


@dataclass(frozen=True)
class DegreeBoundRow:
    degree: int
    dim: int
    bound: float
    max_modulus: float


@dataclass(frozen=True)
class GapCertificate:
    """The inequality chain closing the torus mixing bound.

    passed means |Lambda_2| < min(tau_below, tau_above) <= lambda^-1 e^{h_top},
    hence correlations for the maximal-entropy (= Lebesgue) measure decay at
    least like lambda^-n. Failure signals a bug, never a valid state.
    """

    lambda2_modulus: float
    tau_below: float  # max |sigma_{d_s - 1}|
    tau_above: float  # max |sigma_{d_s + 1}|
    annulus_inner: float  # lambda^-1 e^{h_top}
    passed: bool


def resonance_report(t: ToralAutomorphism, inner_radius: float | None = None,
                     rank_tol: float = RANK_TOL,
                     action: CohomologyAction | None = None) -> ResonanceReport:
    """Resonances of the degree-d_s cohomology action above the annulus radius.

    inner_radius defaults to lambda^-1 e^{h_top} (the proved annulus); passing
    a smaller value widens the annulus and can only add eigenvalues. nu and
    the decay bound always use the default radius.
    """
    if action is None:
        action = induced_action(t, t.d_s, rank_tol)
    e_h = math.exp(t.h_top)
    default_inner = e_h / t.lam
    inner = default_inner if inner_radius is None else float(inner_radius)

    blocks = [(z, n) for z, n in action.jordan_blocks if abs(z) > inner]
    blocks.sort(key=lambda zn: (-round(abs(zn[0]), 12),
                                round(math.atan2(zn[0].imag, zn[0].real), 12), -zn[1]))

    moduli = sorted((abs(z) for z in action.spectrum), reverse=True)
    lambda2 = moduli[1] if len(moduli) > 1 else 0.0
    nu = max(lambda2, default_inner)
    decay = nu / e_h

    rescaled = tuple(z / e_h for z, _ in blocks)
    terms = tuple((z / e_h, n - 1) for z, n in blocks[1:])
    return ResonanceReport(
        h_top=t.h_top,
        lam=t.lam,
        annulus_inner=inner,
        resonances=tuple(blocks),
        rescaled=rescaled,
        nu=nu,
        decay_rate_bound=decay,
        asymptotics_terms=terms,
        lambda2_modulus=lambda2,
    )


def degree_bounds(t: ToralAutomorphism) -> list[DegreeBoundRow]:
    """Spectral-radius bound per degree: 1 at l in {0, d}, else
    lambda^-|d_s - l| e^{h_top}; checked against the computed spectra.

    Raises BoundViolated if any computed spectrum exceeds its bound by more
    than 1e-8 (which would indicate an implementation bug).
    """
    d = t.dim
    e_h = math.exp(t.h_top)
    out = []
    for l in range(d + 1):
        act = induced_action(t, l)
        bound = 1.0 if l in (0, d) else t.lam ** (-abs(t.d_s - l)) * e_h
        max_mod = max(abs(z) for z in act.spectrum)
        if max_mod > bound + 1e-8:
            raise BoundViolated(
                f"degree {l}: max |sigma_l| = {max_mod!r} exceeds bound {bound!r}"
            )
        out.append(DegreeBoundRow(degree=l, dim=act.dim, bound=bound, max_modulus=max_mod))
    return out


def toral_gap_check(t: ToralAutomorphism) -> GapCertificate:
    """Verify |Lambda_2| < min(tau_{d_s-1}, tau_{d_s+1}) <= lambda^-1 e^{h_top}.

    tau values are the top spectral moduli of the neighbouring cohomology
    degrees; at the trivial degrees 0 and d the spectrum is {1} or {+-1}, so
    tau = 1 there.
    """
    if t.dim < 2:
        raise ValueError("gap check needs dimension >= 2")
    sigma_ds = induced_action(t, t.d_s).spectrum
    moduli = sorted((abs(z) for z in sigma_ds), reverse=True)
    lambda2 = moduli[1]
    tau_below = max(abs(z) for z in induced_action(t, t.d_s - 1).spectrum)
    tau_above = max(abs(z) for z in induced_action(t, t.d_s + 1).spectrum)
    inner = math.exp(t.h_top) / t.lam
    passed = lambda2 < min(tau_below, tau_above) <= inner + 1e-8
    return GapCertificate(
        lambda2_modulus=lambda2,
        tau_below=tau_below,
        tau_above=tau_above,
        annulus_inner=inner,
        passed=passed,
    )
