"""Information-criterion rank estimators: AIC, BIC, GIC, PC1-PC3 and IC1-IC3.

Every estimator evaluates a criterion curve over the candidate ranks
``r = 0..q`` and returns the smallest minimiser.  Candidate ranks whose
criterion value is undefined for the given spectrum (for example a
log-likelihood term that would need ``ln 0``) are assigned ``+inf`` and
recorded in ``metadata["excluded"]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

import numpy as np

from .errors import ConfigError, DegenerateSpectrumError, DomainError, RangeError, RankSpectraError
from .spectra import EigenSpectrum, tail_mean

__all__ = [
    "CRITERIA",
    "RankEstimate",
    "EstimatorConfig",
    "default_q",
    "free_params",
    "loglik_term",
    "gic_penalty",
    "penalty_factor",
    "aic",
    "bic",
    "gic",
    "pc",
    "ic",
    "estimate_all",
]

CRITERIA = ("AIC", "BIC", "GIC", "PC1", "PC2", "PC3", "IC1", "IC2", "IC3")


@dataclass(frozen=True)
class RankEstimate:
    """Selected rank with the full criterion (or statistic) curve behind it.

    For the argmin-type estimators ``curve[r]`` is the criterion at rank ``r``
    (``r = 0..q``); for scan-type estimators the meaning of the curve is given
    in ``metadata["curve_kind"]``.
    """

    method: str
    r_hat: int
    curve: np.ndarray
    q: int
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_record(self) -> dict[str, Any]:
        curve = [None if not math.isfinite(v) else float(v) for v in np.asarray(self.curve, dtype=float)]
        meta = {k: (v.tolist() if isinstance(v, np.ndarray) else v) for k, v in self.metadata.items()}
        return {"method": self.method, "r_hat": int(self.r_hat), "q": int(self.q), "curve": curve, "metadata": meta}


def default_q(n: int, p: int) -> int:
    """``floor(2 sqrt(min(n, p)))``, capped so that ``q < min(n, p) / 2``."""
    m = min(n, p)
    q = math.floor(2.0 * math.sqrt(m))
    cap = math.ceil(m / 2) - 1
    return max(1, min(q, cap))


@dataclass(frozen=True)
class EstimatorConfig:
    """Search bound ``q`` and optional known noise variance for the PC criteria."""

    q: int | None = None
    noise_variance: float | None = None
    include_zero: bool = True

    def __post_init__(self) -> None:
        if self.q is not None and self.q < 1:
            raise ConfigError("q must be at least 1")
        if self.noise_variance is not None and not (self.noise_variance > 0 and math.isfinite(self.noise_variance)):
            raise ConfigError("noise_variance must be positive and finite")

    def resolve_q(self, spec: EigenSpectrum) -> int:
        q = default_q(spec.n, spec.p) if self.q is None else int(self.q)
        if not q < min(spec.n, spec.p) / 2:
            raise ConfigError(f"q={q} must be smaller than min(n, p)/2 = {min(spec.n, spec.p) / 2}")
        return q


def free_params(r: int, p: int) -> float:
    """Parameter count ``p r - r (r + 2) / 2 + r + 1 + p`` of a rank-r spiked covariance (may be half-integral)."""
    if not 0 <= r <= p:
        raise RangeError(f"need 0 <= r <= p, got r={r}, p={p}")
    return p * r - r * (r + 2) / 2 + r + 1 + p


def loglik_term(spec: EigenSpectrum, r: int) -> float:
    """``sum_{j<=r} ln lam_j + (p - r) ln(tail_mean(r))``: log-determinant of the rank-r fit."""
    lam = spec.eigenvalues
    if r >= 1 and not lam[r - 1] > 0:
        raise DomainError(f"eigenvalue {r} must be positive")
    sigma2 = tail_mean(spec, r)
    if not sigma2 > 0:
        raise DomainError(f"tail mean at r={r} must be positive")
    return float(np.sum(np.log(lam[:r])) + (spec.p - r) * math.log(sigma2))


def _tail_sums(lam: np.ndarray, q: int) -> np.ndarray:
    """``sum_{j>r} lam_j`` for r = 0..q."""
    head = np.concatenate([[0.0], np.cumsum(lam[:q])])
    return lam.sum() - head


def _loglik_curve(spec: EigenSpectrum, q: int) -> np.ndarray:
    lam = spec.eigenvalues
    p = spec.p
    r = np.arange(q + 1)
    tails = _tail_sums(lam, q)
    sigma2 = tails / (p - r)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.concatenate([[0.0], np.cumsum(np.log(lam[:q]))])
        curve = logs + (p - r) * np.log(sigma2)
    head_ok = np.concatenate([[True], lam[:q] > 0])
    curve[~(head_ok & (sigma2 > 0))] = np.inf
    if not math.isfinite(curve[0]):
        raise DomainError("spectrum has no positive mass; criteria are undefined")
    return curve


def gic_penalty(spec: EigenSpectrum, r: int) -> float:
    """Data-adaptive GIC parameter count.

    ``C(r,2) + sum_{j<=r<l} lam_l (lam_j - s2) / (s2 (lam_j - lam_l)) + r + m2 / s2^2``
    where ``s2`` is the tail mean after ``r`` and ``m2`` the tail mean of squares.
    """
    lam = spec.eigenvalues
    p = spec.p
    if not 0 <= r < p:
        raise RangeError(f"need 0 <= r < p, got r={r}")
    s2 = tail_mean(spec, r)
    if not s2 > 0:
        raise DomainError(f"tail mean at r={r} must be positive")
    head, tail = lam[:r], lam[r:]
    diff = head[:, None] - tail[None, :]
    if np.any(diff == 0):
        raise DegenerateSpectrumError(f"a leading and a trailing eigenvalue coincide at r={r}")
    cross = np.sum(tail[None, :] * (head[:, None] - s2) / (s2 * diff))
    ratio = np.mean(tail**2) / s2**2
    return r * (r - 1) / 2 + float(cross) + r + float(ratio)


def penalty_factor(variant: int, n: int, p: int) -> float:
    """Per-rank penalty factor shared by PC_k and IC_k."""
    m = min(n, p)
    if variant == 1:
        return (n + p) / (n * p) * math.log(n * p / (n + p))
    if variant == 2:
        return (n + p) / (n * p) * math.log(m)
    if variant == 3:
        return math.log(m) / m
    raise ConfigError(f"PC/IC variant must be 1, 2 or 3, got {variant}")


def _select(method: str, curve: np.ndarray, q: int, include_zero: bool, meta: dict[str, Any]) -> RankEstimate:
    search = curve if include_zero else np.concatenate([[np.inf], curve[1:]])
    if not np.any(np.isfinite(search)):
        raise DomainError(f"{method}: no admissible candidate rank")
    excluded = np.flatnonzero(~np.isfinite(curve))
    if excluded.size:
        meta["excluded"] = excluded.tolist()
    r_hat = int(np.argmin(search))
    return RankEstimate(method, r_hat, curve, q, meta)


def _base_meta(spec: EigenSpectrum) -> dict[str, Any]:
    return {"n": spec.n, "p": spec.p}


def _likelihood_criterion(method: str, spec: EigenSpectrum, cfg: EstimatorConfig, weight: float) -> RankEstimate:
    q = cfg.resolve_q(spec)
    r = np.arange(q + 1)
    b = spec.p * r - r * (r + 2) / 2 + r + 1 + spec.p
    curve = _loglik_curve(spec, q) + weight * b
    return _select(method, curve, q, cfg.include_zero, _base_meta(spec))


def aic(spec: EigenSpectrum, cfg: EstimatorConfig = EstimatorConfig()) -> RankEstimate:
    """AIC: log-determinant plus ``(2/n) b_r``."""
    return _likelihood_criterion("AIC", spec, cfg, 2.0 / spec.n)


def bic(spec: EigenSpectrum, cfg: EstimatorConfig = EstimatorConfig()) -> RankEstimate:
    """BIC: log-determinant plus ``(ln n / n) b_r``."""
    return _likelihood_criterion("BIC", spec, cfg, math.log(spec.n) / spec.n)


def gic(spec: EigenSpectrum, cfg: EstimatorConfig = EstimatorConfig()) -> RankEstimate:
    """GIC: log-determinant plus ``(2/n)`` times the data-adaptive penalty."""
    q = cfg.resolve_q(spec)
    curve = _loglik_curve(spec, q)
    for r in range(q + 1):
        if not math.isfinite(curve[r]):
            continue
        try:
            curve[r] += 2.0 / spec.n * gic_penalty(spec, r)
        except (DegenerateSpectrumError, DomainError):
            curve[r] = np.inf
    return _select("GIC", curve, q, cfg.include_zero, _base_meta(spec))


def pc(spec: EigenSpectrum, cfg: EstimatorConfig = EstimatorConfig(), variant: int = 1) -> RankEstimate:
    """PC_k: residual mean eigenvalue plus ``sigma2 * r * factor_k``.

    ``sigma2`` is ``cfg.noise_variance`` when given, otherwise the tail mean after ``q``.
    """
    q = cfg.resolve_q(spec)
    factor = penalty_factor(variant, spec.n, spec.p)
    sigma2 = cfg.noise_variance if cfg.noise_variance is not None else tail_mean(spec, q)
    r = np.arange(q + 1)
    curve = _tail_sums(spec.eigenvalues, q) / spec.p + sigma2 * r * factor
    meta = _base_meta(spec) | {"sigma2": float(sigma2), "factor": factor}
    return _select(f"PC{variant}", curve, q, cfg.include_zero, meta)


def ic(spec: EigenSpectrum, cfg: EstimatorConfig = EstimatorConfig(), variant: int = 1) -> RankEstimate:
    """IC_k: log residual mean eigenvalue plus ``r * factor_k``."""
    q = cfg.resolve_q(spec)
    factor = penalty_factor(variant, spec.n, spec.p)
    tails = _tail_sums(spec.eigenvalues, q) / spec.p
    with np.errstate(divide="ignore"):
        curve = np.where(tails > 0, np.log(np.maximum(tails, np.finfo(float).tiny)), np.inf)
    curve = curve + np.arange(q + 1) * factor
    meta = _base_meta(spec) | {"factor": factor}
    return _select(f"IC{variant}", curve, q, cfg.include_zero, meta)


_DISPATCH: dict[str, Callable[[EigenSpectrum, EstimatorConfig], RankEstimate]] = {
    "AIC": aic,
    "BIC": bic,
    "GIC": gic,
    **{f"PC{k}": (lambda s, c, k=k: pc(s, c, k)) for k in (1, 2, 3)},
    **{f"IC{k}": (lambda s, c, k=k: ic(s, c, k)) for k in (1, 2, 3)},
}


def estimate_all(
    spec: EigenSpectrum,
    cfg: EstimatorConfig = EstimatorConfig(),
    methods: Iterable[str] = CRITERIA,
    errors: dict[str, Exception] | None = None,
) -> Mapping[str, RankEstimate]:
    """Run each requested criterion; failures are stored in ``errors`` (if given) and skipped."""
    out: dict[str, RankEstimate] = {}
    for method in methods:
        fn = _DISPATCH.get(method)
        try:
            if fn is None:
                raise ConfigError(f"unknown criterion {method!r}")
            out[method] = fn(spec, cfg)
        except RankSpectraError as exc:
            if errors is not None:
                errors[method] = exc
    return out
