"""Correlation functions of toral automorphisms against Lebesgue measure.

C_n(phi, psi) = int phi (psi o f^n) dx - int phi dx int psi dx. For linear
maps the measure of maximal entropy is Lebesgue, so this is the quantity the
mixing bounds speak about. Trigonometric polynomials admit an exact
evaluation by mode matching (the frequency of psi iterates under M^T and must
cancel a frequency of phi); everything else is estimated by seeded
Monte-Carlo, which doubles as the oracle pinning the mode-map convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import ToralAutomorphism
from .errors import InsufficientData

_IMAG_TOL = 1e-10


class TrigObservable:
    """Finite trigonometric polynomial sum_k a_k exp(2 pi i k.x) on T^d.

    coeffs maps integer frequency tuples to complex amplitudes; real-valued
    observables must satisfy a_{-k} = conj(a_k), which is checked.
    """

    def __init__(self, coeffs: dict, real_valued: bool | None = None):
        clean = {}
        for k, a in coeffs.items():
            key = tuple(int(x) for x in k)
            a = complex(a)
            if a != 0:
                clean[key] = clean.get(key, 0j) + a
        self.coeffs = {k: a for k, a in clean.items() if a != 0}
        if self.coeffs:
            dims = {len(k) for k in self.coeffs}
            if len(dims) != 1:
                raise ValueError("mixed frequency dimensions")
            self.dim = dims.pop()
        else:
            self.dim = None
        hermitian = all(
            abs(self.coeffs.get(tuple(-x for x in k), 0j) - a.conjugate()) < 1e-14
            for k, a in self.coeffs.items()
        )
        if real_valued is None:
            real_valued = hermitian
        elif real_valued and not hermitian:
            raise ValueError("real_valued requires a_{-k} = conj(a_k)")
        self.real_valued = real_valued

    @classmethod
    def cosine(cls, freq) -> "TrigObservable":
        """cos(2 pi k.x) for an integer frequency vector k."""
        k = tuple(int(x) for x in freq)
        mk = tuple(-x for x in k)
        return cls({k: 0.5, mk: 0.5}) if k != mk else cls({k: 1.0})

    @classmethod
    def sine(cls, freq) -> "TrigObservable":
        k = tuple(int(x) for x in freq)
        mk = tuple(-x for x in k)
        if k == mk:
            return cls({})
        return cls({k: -0.5j, mk: 0.5j})

    @classmethod
    def constant(cls, value: complex, dim: int) -> "TrigObservable":
        return cls({tuple([0] * dim): value})

    @classmethod
    def from_terms(cls, terms) -> "TrigObservable":
        """terms: iterable of (frequency vector, amplitude)."""
        agg: dict = {}
        for k, a in terms:
            key = tuple(int(x) for x in k)
            agg[key] = agg.get(key, 0j) + complex(a)
        return cls(agg)

    def support(self):
        return set(self.coeffs)

    def __add__(self, other: "TrigObservable") -> "TrigObservable":
        agg = dict(self.coeffs)
        for k, a in other.coeffs.items():
            agg[k] = agg.get(k, 0j) + a
        return TrigObservable(agg)

    def __rmul__(self, scalar) -> "TrigObservable":
        return TrigObservable({k: scalar * a for k, a in self.coeffs.items()})

    __mul__ = __rmul__

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at an array of points, one point per row."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        out = np.zeros(len(pts), dtype=complex)
        for k, a in self.coeffs.items():
            out += a * np.exp(2j * np.pi * (pts @ np.array(k, dtype=float)))
        return out


@dataclass(frozen=True)
class CorrelationPoint:
    n: int
    value: complex
    stderr: float | None


@dataclass(frozen=True)
class CorrelationSeries:
    values: tuple[CorrelationPoint, ...]
    method: str  # "exact" | "monte_carlo"
    bound_rate: float | None = None
    fitted_rate: float | None = None
    decorrelation_time: int | None = None

    def magnitudes(self):
        return [(p.n, abs(p.value)) for p in self.values]


@dataclass(frozen=True)
class FitResult:
    rate: float  # slope of log|C_n| vs n (natural log)
    prefactor: float  # exp(intercept)
    n_used: tuple[int, ...]

    def within_bound(self, log_bound_rate: float, tol: float = 0.1) -> bool:
        return self.rate <= log_bound_rate + tol


def correlate_exact(t: ToralAutomorphism, phi: TrigObservable, psi: TrigObservable,
                    n_max: int, bound_rate: float | None = None) -> CorrelationSeries:
    """Exact correlation series of trigonometric polynomials under x -> Mx.

    The only surviving terms pair a frequency of phi with -(M^T)^n k for a
    frequency k of psi. The series is identically zero once every nonzero
    frequency of psi has permanently left the (negated) support of phi; that
    decorrelation time is certified via the expanding part of each mode and
    reported on the series.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if bound_rate is None:
        from .bounds import resonance_report

        bound_rate = resonance_report(t).decay_rate_bound
    mt = np.array(t.matrix, dtype=np.int64).T
    phi_supp = {k: a for k, a in phi.coeffs.items()}
    psi_modes = [(np.array(k, dtype=np.int64), a) for k, a in psi.coeffs.items()
                 if any(k)]
    horizon = max(n_max, _return_horizon(mt, [k for k, _ in psi_modes], phi_supp))

    values = [0j] * (n_max + 1)
    last_hit = -1
    cur = [k.copy() for k, _ in psi_modes]
    for n in range(horizon + 1):
        if n > 0:
            cur = [mt @ k for k in cur]
        hit = 0j
        for (k0, a), img in zip(psi_modes, cur):
            b = phi_supp.get(tuple(-img))
            if b is not None:
                hit += b * a
        if hit != 0:
            last_hit = n
            if n <= n_max:
                values[n] = hit
    if phi.real_valued and psi.real_valued:
        worst = max((abs(v.imag) for v in values), default=0.0)
        assert worst < _IMAG_TOL, f"imaginary residue {worst} betrays a convention bug"
    pts = tuple(CorrelationPoint(n, values[n], None) for n in range(n_max + 1))
    return CorrelationSeries(
        values=pts,
        method="exact",
        bound_rate=bound_rate,
        decorrelation_time=last_hit + 1,
    )


def _return_horizon(mt: np.ndarray, psi_modes, phi_supp) -> int:
    """Iterate count after which no psi mode can re-enter phi's support.

    Writing a mode in the eigenbasis of M^T, the expanding component grows at
    least like lam_min^n; once sigma_min(V) * lam_min^n * |y_u| exceeds the
    largest frequency norm of phi, the orbit can never return.
    """
    if not psi_modes or not phi_supp:
        return 0
    radius = max(math.sqrt(sum(x * x for x in k)) for k in phi_supp)
    if radius == 0:
        return 0
    evals, vecs = np.linalg.eig(mt.astype(float))
    expanding = np.abs(evals) > 1.0
    lam_min = float(np.min(np.abs(evals[expanding])))
    sigma_min = float(np.linalg.svd(vecs, compute_uv=False)[-1])
    horizon = 0
    for k in psi_modes:
        y = np.linalg.solve(vecs, k.astype(complex))
        yu = float(np.linalg.norm(y[expanding]))
        assert yu > 0, "integer mode inside the stable subspace cannot happen"
        n_star = math.log(max(radius, 1.0) / (sigma_min * yu)) / math.log(lam_min)
        horizon = max(horizon, int(math.ceil(max(n_star, 0.0))) + 1)
    return horizon


def correlate_mc(map_fn, phi, psi, n_max: int, samples: int, seed: int,
                 dim: int = 2, bound_rate: float | None = None,
                 block_size: int = 250_000) -> CorrelationSeries:
    """Monte-Carlo correlation series under an arbitrary torus map.

    Estimates C_n = mean(phi(x) psi(f^n x)) - mean(phi) mean(psi) over uniform
    samples (Lebesgue; equals the maximal-entropy measure for unimodular
    linear maps). The sample stream is split into fixed-size blocks with
    seed-derived RNG streams, so results are reproducible and independent of
    any evaluation parallelism. stderr is the standard error of the product
    mean at each lag.
    """
    if samples < 1000:
        raise ValueError("need at least 10^3 samples")
    sum_p = np.zeros(n_max + 1, dtype=complex)
    sum_p2 = np.zeros(n_max + 1, dtype=float)
    sum_phi = 0j
    sum_psi = 0j
    done = 0
    block = 0
    while done < samples:
        b = min(block_size, samples - done)
        rng = np.random.default_rng([seed, block])
        x = rng.random((b, dim))
        phv = np.asarray(phi(x), dtype=complex)
        sum_phi += phv.sum()
        cur = x
        for n in range(n_max + 1):
            if n > 0:
                cur = map_fn(cur)
            psv = np.asarray(psi(cur), dtype=complex)
            if n == 0:
                sum_psi += psv.sum()
            prod = phv * psv
            sum_p[n] += prod.sum()
            sum_p2[n] += float(np.sum(prod.real ** 2 + prod.imag ** 2))
        done += b
        block += 1
    mean_p = sum_p / samples
    mean_phi = sum_phi / samples
    mean_psi = sum_psi / samples
    var = np.maximum(sum_p2 / samples - np.abs(mean_p) ** 2, 0.0)
    stderr = np.sqrt(var / samples)
    pts = tuple(
        CorrelationPoint(n, complex(mean_p[n] - mean_phi * mean_psi), float(stderr[n]))
        for n in range(n_max + 1)
    )
    return CorrelationSeries(values=pts, method="monte_carlo", bound_rate=bound_rate)


def default_noise_floor(series: CorrelationSeries) -> float:
    """5x the largest standard error for Monte-Carlo series, 0 for exact."""
    if series.method == "monte_carlo":
        return 5.0 * max(p.stderr for p in series.values)
    return 0.0


def fit_rate(series: CorrelationSeries, floor: float | None = None) -> FitResult:
    """Least-squares decay fit: slope and intercept of log|C_n| against n.

    Only entries with |C_n| > floor participate. Raises InsufficientData with
    fewer than three usable points (typical for exact trigonometric series,
    which hit exact zero at the decorrelation time).
    """
    if floor is None:
        floor = default_noise_floor(series)
    usable = [(p.n, abs(p.value)) for p in series.values if abs(p.value) > floor]
    if len(usable) < 3:
        raise InsufficientData(
            f"{len(usable)} points above floor {floor!r}; need at least 3"
        )
    ns = np.array([n for n, _ in usable], dtype=float)
    logs = np.log(np.array([v for _, v in usable]))
    slope, intercept = np.polyfit(ns, logs, 1)
    return FitResult(rate=float(slope), prefactor=float(np.exp(intercept)),
                     n_used=tuple(int(n) for n in ns))


def with_fit(series: CorrelationSeries, floor: float | None = None) -> CorrelationSeries:
    """Return a copy of the series with fitted_rate filled in (None if the
    fit has insufficient data)."""
    try:
        fit = fit_rate(series, floor)
        return replace(series, fitted_rate=fit.rate)
    except InsufficientData:
        return series


def envelope_prefactor(series: CorrelationSeries, rate: float,
                       floor: float | None = None) -> float:
    """Smallest C with |C_n| <= C * rate^n over all points above the floor."""
    if floor is None:
        floor = default_noise_floor(series)
    vals = [abs(p.value) / rate ** p.n for p in series.values if abs(p.value) > floor]
    return max(vals, default=0.0)
