"""Comparison rank estimators: edge-based (ACT, DPA, BEMA) and gap-based (ED, ON, ER, GR).

The scan-type estimators (ON, ER, GR) store their statistic for ``j = 1..q`` in
``curve[j]``; ``curve[0]`` is ``-inf`` so that every curve is indexed by the
candidate rank.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg, stats

from .criteria import RankEstimate, default_q
from .errors import ConfigError, DomainError, FitError, IterationLimitWarning
from .rmt_core import MPModel, SpectralDistribution, upper_edge
from .spectra import EigenSpectrum

__all__ = [
    "ALT_METHODS",
    "BemaConfig",
    "EdConfig",
    "act",
    "dpa",
    "empirical_distribution",
    "bema",
    "ed",
    "on",
    "er",
    "gr",
]

ALT_METHODS = ("ACT", "DPA", "BEMA", "ED", "ON", "ER", "GR")


# -- ACT ------------------------------------------------------------------------


def act(spec_corr: EigenSpectrum) -> RankEstimate:
    """Rank from bias-corrected correlation eigenvalues exceeding ``1 + sqrt(p/(n-1))``.

    Indices ``j`` whose correction is undefined (a vanishing denominator, e.g.
    tied or zero eigenvalues in a rank-deficient tail) are skipped and listed
    in ``metadata["skipped"]``.
    """
    if spec_corr.source not in ("correlation", "external"):
        raise DomainError("ACT expects eigenvalues of a sample correlation matrix")
    lam = spec_corr.eigenvalues
    n, p = spec_corr.n, spec_corr.p
    threshold = 1.0 + math.sqrt(p / (n - 1))
    corrected = np.full(p + 1, -np.inf)
    skipped: list[int] = []
    for j in range(1, p):
        z = lam[j - 1]
        tail = lam[j:] - z
        interp = 0.75 * lam[j - 1] + 0.25 * lam[j] - z
        if z == 0 or np.any(tail == 0) or interp == 0:
            skipped.append(j)
            continue
        k = p - j
        m = (np.sum(1.0 / tail) + 1.0 / interp) / k
        ratio = k / (n - 1)
        m_low = -(1.0 - ratio) / z + ratio * m
        if m_low == 0:
            skipped.append(j)
            continue
        corrected[j] = -1.0 / m_low
    above = np.flatnonzero(corrected > threshold)
    r_hat = int(above.max()) if above.size else 0
    meta = {"n": n, "p": p, "threshold": threshold, "curve_kind": "corrected_eigenvalue"}
    if skipped:
        meta["skipped"] = skipped
    return RankEstimate("ACT", r_hat, corrected, p - 1, meta)


# -- DPA ------------------------------------------------------------------------


def empirical_distribution(values) -> SpectralDistribution:
    """Discrete law placing mass 1/len(values) on each value (ties merged)."""
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size == 0 or np.any(v < 0) or not np.all(np.isfinite(v)):
        raise DomainError("values must be finite, nonnegative and nonempty")
    locs, counts = np.unique(v, return_counts=True)
    masses = counts / v.size
    return SpectralDistribution(
        locs, masses, np.empty(0), np.empty(0), float(locs[0]), float(locs[-1]), "empirical"
    )


def dpa(spec: EigenSpectrum, diag_values) -> RankEstimate:
    """Count eigenvalues above the upper edge of ``F_{p/n, H_hat}``, ``H_hat`` = ESD of diag(S_n)."""
    d = np.asarray(diag_values, dtype=float).reshape(-1)
    if d.size != spec.p:
        raise DomainError(f"need {spec.p} diagonal values, got {d.size}")
    if not np.any(d > 0):
        raise DomainError("diagonal of S_n is identically zero")
    H_hat = empirical_distribution(d)
    edge = upper_edge(MPModel(spec.p / spec.n, H_hat)).edge
    r_hat = int(np.count_nonzero(spec.eigenvalues > edge))
    meta = {"n": spec.n, "p": spec.p, "edge": edge, "curve_kind": "eigenvalue_minus_edge"}
    return RankEstimate("DPA", r_hat, spec.eigenvalues - edge, spec.p, meta)


# -- BEMA -----------------------------------------------------------------------


@dataclass(frozen=True)
class BemaConfig:
    """Settings for the Gamma-noise bulk fit and its Monte-Carlo edge estimate.

    ``fit_draws`` pure-noise samples per grid point form the reference bulk
    quantiles; ``M`` samples from the fitted model give the edge distribution.
    """

    alpha: float = 0.2
    beta: float = 0.1
    M: int = 500
    theta_grid: tuple[float, ...] = field(default_factory=lambda: tuple(np.geomspace(0.1, 100.0, 40)))
    fit_draws: int = 50

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 0.5:
            raise ConfigError("alpha must lie in (0, 0.5)")
        if not 0 < self.beta < 1:
            raise ConfigError("beta must lie in (0, 1)")
        if self.M < 50:
            raise ConfigError("M must be at least 50")
        if self.fit_draws < 1:
            raise ConfigError("fit_draws must be positive")
        if not self.theta_grid or any(not (t > 0 and math.isfinite(t)) for t in self.theta_grid):
            raise ConfigError("theta_grid must be a nonempty list of positive numbers")


def _noise_spectrum(Z: np.ndarray, d: np.ndarray, gram: np.ndarray | None) -> np.ndarray:
    """Descending nonzero eigenvalues of ``D^{1/2} Z^T Z D^{1/2} / n``."""
    n, p = Z.shape
    if p <= n:
        root = np.sqrt(d)
        ev = linalg.eigvalsh(gram * root[:, None] * root[None, :] / n, check_finite=False)
    else:
        ev = linalg.eigvalsh((Z * d) @ Z.T / n, check_finite=False)
    return ev[::-1]


def _largest_eigenvalue(X: np.ndarray) -> float:
    n, p = X.shape
    M = X.T @ X / n if p <= n else X @ X.T / n
    k = M.shape[0]
    return float(linalg.eigh(M, eigvals_only=True, subset_by_index=[k - 1, k - 1], check_finite=False)[0])


def bema(spec: EigenSpectrum, cfg: BemaConfig, rng: np.random.Generator) -> RankEstimate:
    """Gamma-noise bulk fit followed by a Monte-Carlo estimate of the noise edge.

    The fit compares the trimmed bulk ``lam_k, k in [alpha m, (1 - alpha) m]``
    (``m = min(n, p)``) with Monte-Carlo reference quantiles for unit-mean
    Gamma(theta) noise, profiling the scale ``sigma2`` by least squares.  The
    reference draws share random numbers across the theta grid.
    """
    n, p = spec.n, spec.p
    m = min(n, p)
    lo = max(1, math.ceil(cfg.alpha * m))
    hi = math.floor((1.0 - cfg.alpha) * m)
    if hi < lo:
        raise DomainError("BEMA bulk window is empty")
    window = np.arange(lo - 1, hi)
    y = spec.eigenvalues[window]
    fit_rng, mc_rng = rng.spawn(2)

    thetas = np.asarray(cfg.theta_grid, dtype=float)
    ref = np.zeros((thetas.size, window.size))
    for _ in range(cfg.fit_draws):
        U = fit_rng.uniform(size=p)
        Z = fit_rng.standard_normal((n, p))
        gram = Z.T @ Z if p <= n else None
        for i, theta in enumerate(thetas):
            d = stats.gamma.ppf(U, theta) / theta
            ref[i] += _noise_spectrum(Z, d, gram)[window]
    ref /= cfg.fit_draws
    denom = np.einsum("ij,ij->i", ref, ref)
    with np.errstate(divide="ignore", invalid="ignore"):
        scale = ref @ y / denom
        loss = np.sum((y[None, :] - scale[:, None] * ref) ** 2, axis=1)
    ok = np.isfinite(loss) & (denom > 0) & (scale > 0)
    if not np.any(ok):
        raise FitError("BEMA grid fit is degenerate")
    loss[~ok] = np.inf
    best = int(np.argmin(loss))
    theta_hat, sigma2_hat = float(thetas[best]), float(scale[best])

    tops = np.empty(cfg.M)
    for k in range(cfg.M):
        d = mc_rng.gamma(theta_hat, sigma2_hat / theta_hat, size=p)
        X = mc_rng.standard_normal((n, p)) * np.sqrt(d)
        tops[k] = _largest_eigenvalue(X)
    edge = float(np.quantile(tops, 1.0 - cfg.beta))
    r_hat = min(int(np.count_nonzero(spec.eigenvalues > edge)), p)
    meta = {
        "n": n, "p": p, "theta": theta_hat, "sigma2": sigma2_hat, "edge": edge,
        "curve_kind": "eigenvalue_minus_edge",
    }
    return RankEstimate("BEMA", r_hat, spec.eigenvalues - edge, p, meta)


# -- ED -------------------------------------------------------------------------


@dataclass(frozen=True)
class EdConfig:
    q: int
    max_iterations: int = 50

    def __post_init__(self) -> None:
        if self.q < 5:
            raise ConfigError("ED needs q >= 5")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be positive")


def ed(spec: EigenSpectrum, cfg: EdConfig) -> RankEstimate:
    """Largest ``j <= q`` whose eigen-gap exceeds a threshold calibrated on the bulk.

    The threshold ``delta = 2|slope|`` comes from regressing five consecutive
    eigenvalues ``lam_j..lam_{j+4}`` on ``(j-1)^{2/3}..(j+3)^{2/3}``; the
    calibration restarts at ``j = r_hat + 1`` until ``r_hat`` repeats.
    """
    lam = spec.eigenvalues
    q = cfg.q
    if spec.p < q + 5:
        raise DomainError(f"ED needs p >= q + 5 (p={spec.p}, q={q})")
    gaps = lam[:q] - lam[1 : q + 1]
    curve = np.concatenate([[np.nan], gaps])
    j = q + 1
    r_hat: int | None = None
    delta = 0.0
    converged = False
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        x = np.arange(j - 1, j + 4, dtype=float) ** (2.0 / 3.0)
        yv = lam[j - 1 : j + 4]
        xc = x - x.mean()
        slope = float(np.dot(xc, yv - yv.mean()) / np.dot(xc, xc))
        delta = 2.0 * abs(slope)
        hits = np.flatnonzero(gaps > 0) if delta == 0 else np.flatnonzero(gaps >= delta)
        new = int(hits.max()) + 1 if hits.size else 0
        if new == r_hat:
            converged = True
            break
        r_hat = new
        j = r_hat + 1
    if not converged:
        warnings.warn(f"ED stopped after {cfg.max_iterations} iterations", IterationLimitWarning, stacklevel=2)
    meta = {
        "n": spec.n, "p": spec.p, "delta": delta, "iterations": iterations,
        "converged": converged, "curve_kind": "eigen_gap",
    }
    return RankEstimate("ED", int(r_hat), curve, q, meta)


# -- ON / ER / GR ---------------------------------------------------------------


def _argmax_scan(method: str, spec: EigenSpectrum, q: int, stat: np.ndarray) -> RankEstimate:
    if q < 1:
        raise ConfigError("q must be at least 1")
    curve = np.concatenate([[-np.inf], stat])
    if not np.any(np.isfinite(stat)):
        raise DomainError(f"{method}: statistic undefined for every j <= q")
    r_hat = int(np.argmax(stat)) + 1
    return RankEstimate(method, r_hat, curve, q, {"n": spec.n, "p": spec.p, "curve_kind": "ratio_statistic"})


def _padded(lam: np.ndarray, length: int) -> np.ndarray:
    out = np.full(length, np.nan)
    out[: min(length, lam.size)] = lam[:length]
    return out


def on(spec: EigenSpectrum, q: int) -> RankEstimate:
    """argmax of successive eigen-gap ratios ``(lam_j - lam_{j+1}) / (lam_{j+1} - lam_{j+2})``."""
    lam = _padded(spec.eigenvalues, q + 2)
    num = lam[:q] - lam[1 : q + 1]
    den = lam[1 : q + 1] - lam[2 : q + 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        stat = np.where((den > 0) & np.isfinite(num), num / den, -np.inf)
    return _argmax_scan("ON", spec, q, stat)


def er(spec: EigenSpectrum, q: int) -> RankEstimate:
    """argmax of eigenvalue ratios ``lam_j / lam_{j+1}``."""
    lam = _padded(spec.eigenvalues, q + 1)
    num, den = lam[:q], lam[1 : q + 1]
    with np.errstate(divide="ignore", invalid="ignore"):
        stat = np.where(den > 0, num / den, -np.inf)
    return _argmax_scan("ER", spec, q, stat)


def gr(spec: EigenSpectrum, q: int) -> RankEstimate:
    """argmax of growth ratios ``ln(1 + lam_j / V_j) / ln(1 + lam_{j+1} / V_{j+1})``, ``V_j = sum_{l>j} lam_l``."""
    lam_full = spec.eigenvalues
    # V_j for j = 1..p, accumulated from the small end to avoid cancellation
    tails = np.concatenate([np.cumsum(lam_full[::-1])[::-1][1:], [0.0]])
    lam = _padded(lam_full, q + 1)
    V = _padded(tails, q + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        growth = np.where(V > 0, np.log1p(lam / V), np.nan)
        num, den = growth[:q], growth[1 : q + 1]
        stat = np.where((den > 0) & np.isfinite(num), num / den, -np.inf)
    return _argmax_scan("GR", spec, q, stat)


def default_ed_config(spec: EigenSpectrum) -> EdConfig:
    return EdConfig(q=default_q(spec.n, spec.p))
