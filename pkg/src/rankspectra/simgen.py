"""Synthetic spiked-covariance populations, replicated studies and accuracy tables.

One replication of a scenario:

1. draw the spiked eigenvalues ``lam_1 >= ... >= lam_r0`` (spike scheme);
2. draw the remaining ``p - r0`` population eigenvalues from ``H``;
3. draw an orthogonal ``Gamma`` (Haar, or block-diagonal Haar) and form
   ``Sigma^{1/2} = Gamma diag(sqrt(lam)) Gamma^T``;
4. draw ``X = Z Sigma^{1/2}`` with standardized iid noise ``Z``;
5. run every requested estimator on the resulting sample spectra.

Every replication owns a generator seeded from
``SeedSequence([master_seed, blake2b64(setting_id), replication_index])``,
so results do not depend on scheduling or worker count.
"""

from __future__ import annotations

import csv
import hashlib
import io
import math
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Iterable, Mapping, Sequence

import numpy as np
from joblib import Parallel, delayed
from threadpoolctl import threadpool_limits

from . import alt_estimators, criteria
from .errors import ConfigError, RankSpectraError, UnknownDistributionError
from .gap_analyzer import GAP_METHODS, GapSetting, check_gap
from .rmt_core import MPModel, SpectralDistribution, mean_H, named_distribution
from .spectra import EigenSpectrum, corr_eigenvalues, cov_eigenvalues, diag_covariance

__all__ = [
    "H_IDS",
    "NOISE_LAWS",
    "ALL_METHODS",
    "GENERATOR_NAME",
    "ScenarioConfig",
    "PopulationModel",
    "AccuracyRow",
    "AccuracyTable",
    "sample_H",
    "build_spikes",
    "haar_orthogonal",
    "block_orthogonal",
    "block_sizes",
    "build_population",
    "draw_data",
    "replication_rng",
    "estimate_ranks",
    "run_replication",
    "run_study",
]

H_IDS = ("H1", "H2", "H3", "H4")
NOISE_LAWS = ("gaussian", "t5", "pareto", "lognormal")
SPIKE_SCHEMES = ("uniform_shift", "explicit_lambda1", "geometric")
GAMMA_SCHEMES = ("haar", "block")
ALL_METHODS = criteria.CRITERIA + alt_estimators.ALT_METHODS
GENERATOR_NAME = "numpy.random.PCG64 via SeedSequence([master_seed, blake2b64(setting_id), replication_index])"


@dataclass(frozen=True)
class ScenarioConfig:
    """One simulation cell.

    ``sigma2`` selects the noise variance handed to the PC criteria: ``"mu_H"``
    (the first moment of ``H``), ``"estimate"`` (tail mean after ``q``) or a
    positive number.
    """

    setting_id: str
    n: int
    p: int
    H_id: str
    r0: int
    lambda_r0: float
    spike_scheme: str = "uniform_shift"
    lambda1: float | None = None
    ratio: float | None = None
    gamma_scheme: str = "haar"
    blocks: int | None = None
    noise_law: str = "gaussian"
    T: int = 100
    master_seed: int = 0
    q: int | None = None
    sigma2: str | float = "mu_H"
    bema: alt_estimators.BemaConfig = field(default_factory=alt_estimators.BemaConfig)

    def __post_init__(self) -> None:
        if self.H_id not in H_IDS:
            raise UnknownDistributionError(f"unknown distribution id {self.H_id!r}")
        if self.n < 2 or self.p < 1:
            raise ConfigError("need n >= 2 and p >= 1")
        if self.q is None:
            object.__setattr__(self, "q", criteria.default_q(self.n, self.p))
        q = int(self.q)
        if not 0 <= self.r0 < q < min(self.n, self.p):
            raise ConfigError(f"need 0 <= r0 < q < min(n, p); got r0={self.r0}, q={q}")
        if not (self.lambda_r0 > 0 and math.isfinite(self.lambda_r0)):
            raise ConfigError("lambda_r0 must be positive and finite")
        if self.lambda_r0 <= named_distribution(self.H_id).support_upper and self.r0 > 0:
            raise ConfigError("lambda_r0 must exceed the support of H")
        if self.spike_scheme not in SPIKE_SCHEMES:
            raise ConfigError(f"unknown spike scheme {self.spike_scheme!r}")
        if self.spike_scheme == "explicit_lambda1":
            if self.lambda1 is None or not self.lambda1 >= self.lambda_r0 + 1:
                raise ConfigError("explicit_lambda1 needs lambda1 >= lambda_r0 + 1")
            if self.r0 < 2:
                raise ConfigError("explicit_lambda1 needs r0 >= 2")
        if self.spike_scheme == "geometric" and (self.ratio is None or not self.ratio > 1):
            raise ConfigError("geometric spikes need ratio > 1")
        if self.gamma_scheme not in GAMMA_SCHEMES:
            raise ConfigError(f"unknown gamma scheme {self.gamma_scheme!r}")
        if self.gamma_scheme == "block" and (self.blocks is None or not 1 <= self.blocks <= self.p):
            raise ConfigError("block gamma scheme needs 1 <= blocks <= p")
        if self.noise_law not in NOISE_LAWS:
            raise ConfigError(f"unknown noise law {self.noise_law!r}")
        if self.T < 1:
            raise ConfigError("T must be at least 1")
        if not 0 <= self.master_seed < 2**64:
            raise ConfigError("master_seed must be a 64-bit unsigned integer")
        if isinstance(self.sigma2, str):
            if self.sigma2 not in ("mu_H", "estimate"):
                raise ConfigError("sigma2 must be 'mu_H', 'estimate' or a positive number")
        elif not (self.sigma2 > 0 and math.isfinite(self.sigma2)):
            raise ConfigError("sigma2 must be positive")

    @property
    def H(self) -> SpectralDistribution:
        return named_distribution(self.H_id)

    def noise_variance(self) -> float | None:
        if self.sigma2 == "mu_H":
            return mean_H(self.H)
        if self.sigma2 == "estimate":
            return None
        return float(self.sigma2)

    def gap_setting(self) -> GapSetting:
        return GapSetting(self.setting_id, self.n, self.p, self.lambda_r0, self.H)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["bema"] = {**asdict(self.bema), "theta_grid": list(self.bema.theta_grid)}
        return d


@dataclass(frozen=True)
class PopulationModel:
    """Population covariance root and its eigenvalues (descending)."""

    Sigma_root: np.ndarray
    eigvals: np.ndarray
    r0: int
    H_id: str


# -- population and data generation ------------------------------------------


def sample_H(H_id: str, count: int, rng: np.random.Generator) -> np.ndarray:
    """iid draws from one of the benchmark laws H1..H4."""
    if count < 0:
        raise ConfigError("count must be nonnegative")
    if H_id == "H1":
        return rng.beta(3.0, 3.0, size=count)
    if H_id == "H2":
        return np.minimum((rng.poisson(24.0, size=count) + 1.0) / 50.0, 1.0)
    if H_id == "H3":
        return np.minimum(rng.exponential(0.63, size=count), 1.0)
    if H_id == "H4":
        return np.ones(count)
    raise UnknownDistributionError(f"unknown distribution id {H_id!r}")


def build_spikes(cfg: ScenarioConfig, rng: np.random.Generator) -> np.ndarray:
    """Spiked population eigenvalues ``lam_1 >= ... >= lam_r0``."""
    r0, base = cfg.r0, float(cfg.lambda_r0)
    if r0 == 0:
        return np.empty(0)
    if cfg.spike_scheme == "geometric":
        if cfg.ratio is None or not cfg.ratio > 1:
            raise ConfigError("geometric spikes need ratio > 1")
        return base * cfg.ratio ** np.arange(r0 - 1, -1, -1, dtype=float)
    if cfg.spike_scheme == "uniform_shift":
        upper = np.sort(rng.uniform(size=r0 - 1) + base)[::-1]
        return np.concatenate([upper, [base]])
    if cfg.spike_scheme == "explicit_lambda1":
        middle = np.sort(rng.uniform(size=r0 - 2) + base)[::-1]
        return np.concatenate([[float(cfg.lambda1)], middle, [base]])
    raise ConfigError(f"unknown spike scheme {cfg.spike_scheme!r}")


def haar_orthogonal(p: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed p x p orthogonal matrix (QR of a Gaussian matrix with sign fix)."""
    A = rng.standard_normal((p, p))
    Q, R = np.linalg.qr(A)
    signs = np.sign(np.diag(R))
    signs[signs == 0] = 1.0
    return Q * signs[None, :]


def block_sizes(p: int, K: int) -> list[int]:
    """``K`` blocks of size ``floor(p/K)``; the last block absorbs the remainder."""
    if not 1 <= K <= p:
        raise ConfigError("need 1 <= K <= p")
    base = p // K
    return [base] * (K - 1) + [p - base * (K - 1)]


def block_orthogonal(p: int, K: int, rng: np.random.Generator) -> np.ndarray:
    """Block-diagonal matrix of ``K`` independent Haar orthogonal blocks."""
    Q = np.zeros((p, p))
    start = 0
    for size in block_sizes(p, K):
        Q[start : start + size, start : start + size] = haar_orthogonal(size, rng)
        start += size
    return Q


def build_population(cfg: ScenarioConfig, rng: np.random.Generator) -> PopulationModel:
    spikes = build_spikes(cfg, rng)
    bulk = np.sort(sample_H(cfg.H_id, cfg.p - cfg.r0, rng))[::-1]
    eig = np.concatenate([spikes, bulk])
    if cfg.gamma_scheme == "haar":
        G = haar_orthogonal(cfg.p, rng)
    else:
        G = block_orthogonal(cfg.p, int(cfg.blocks), rng)
    root = (G * np.sqrt(eig)[None, :]) @ G.T
    root = 0.5 * (root + root.T)
    return PopulationModel(root, eig, cfg.r0, cfg.H_id)


def _standardized_noise(law: str, shape: tuple[int, int], rng: np.random.Generator) -> np.ndarray:
    if law == "gaussian":
        return rng.standard_normal(shape)
    if law == "t5":
        return rng.standard_t(5.0, size=shape) * math.sqrt(3.0 / 5.0)
    if law == "pareto":
        y = rng.pareto(5.0, size=shape) + 1.0  # classical Pareto(shape 5, scale 1)
        return (y - 1.25) / math.sqrt(5.0 / 48.0)
    if law == "lognormal":
        y = rng.lognormal(0.0, 1.0, size=shape)
        return (y - math.exp(0.5)) / math.sqrt((math.e - 1.0) * math.e)
    raise ConfigError(f"unknown noise law {law!r}")


def draw_data(model: PopulationModel, n: int, noise_law: str, rng: np.random.Generator) -> np.ndarray:
    """``n`` observations ``x_i = Sigma^{1/2} z_i`` with standardized iid noise."""
    p = model.Sigma_root.shape[0]
    Z = _standardized_noise(noise_law, (n, p), rng)
    return Z @ model.Sigma_root


# -- estimation -------------------------------------------------------------------


def setting_key(setting_id: str) -> int:
    return int.from_bytes(hashlib.blake2b(setting_id.encode(), digest_size=8).digest(), "little")


def replication_rng(cfg: ScenarioConfig, replication_index: int) -> np.random.Generator:
    seq = np.random.SeedSequence([int(cfg.master_seed), setting_key(cfg.setting_id), int(replication_index)])
    return np.random.Generator(np.random.PCG64(seq))


def estimate_ranks(
    X: np.ndarray,
    methods: Sequence[str],
    *,
    q: int | None = None,
    noise_variance: float | None = None,
    rng: np.random.Generator | None = None,
    bema_cfg: alt_estimators.BemaConfig | None = None,
    errors: dict[str, Exception] | None = None,
    centered: bool = True,
    divisor: str = "n-1",
) -> dict[str, criteria.RankEstimate]:
    """Run any mix of the sixteen estimators on a data matrix."""
    unknown = [m for m in methods if m not in ALL_METHODS]
    if unknown:
        raise ConfigError(f"unknown methods: {unknown}")
    out: dict[str, criteria.RankEstimate] = {}
    spec = cov_eigenvalues(X, centered=centered, divisor=divisor)
    qq = criteria.default_q(spec.n, spec.p) if q is None else q
    crit = [m for m in methods if m in criteria.CRITERIA]
    if crit:
        cfg = criteria.EstimatorConfig(q=qq, noise_variance=noise_variance)
        out.update(criteria.estimate_all(spec, cfg, crit, errors))
    for m in methods:
        if m in criteria.CRITERIA:
            continue
        try:
            if m == "ACT":
                out[m] = alt_estimators.act(corr_eigenvalues(X))
            elif m == "DPA":
                out[m] = alt_estimators.dpa(spec, diag_covariance(X, centered=centered, divisor=divisor))
            elif m == "BEMA":
                if rng is None:
                    raise ConfigError("BEMA needs a random generator")
                out[m] = alt_estimators.bema(spec, bema_cfg or alt_estimators.BemaConfig(), rng)
            else:
                out.update(spectrum_estimates(spec, [m], qq))
        except RankSpectraError as exc:
            if errors is not None:
                errors[m] = exc
    return {m: out[m] for m in methods if m in out}


def spectrum_estimates(spec: EigenSpectrum, methods: Iterable[str], q: int) -> dict[str, criteria.RankEstimate]:
    """ED / ON / ER / GR, which need nothing beyond the covariance spectrum."""
    out = {}
    for m in methods:
        if m == "ED":
            out[m] = alt_estimators.ed(spec, alt_estimators.EdConfig(q=q))
        elif m == "ON":
            out[m] = alt_estimators.on(spec, q)
        elif m == "ER":
            out[m] = alt_estimators.er(spec, q)
        elif m == "GR":
            out[m] = alt_estimators.gr(spec, q)
        else:
            raise ConfigError(f"{m} cannot be computed from a spectrum alone")
    return out


def run_replication(cfg: ScenarioConfig, methods: Sequence[str], replication_index: int) -> dict[str, int | None]:
    """One replication: generate data, estimate ranks; failed methods map to ``None``."""
    rng = replication_rng(cfg, replication_index)
    model = build_population(cfg, rng)
    X = draw_data(model, cfg.n, cfg.noise_law, rng)
    est_rng = rng.spawn(1)[0]
    results = estimate_ranks(
        X, methods, q=cfg.q, noise_variance=cfg.noise_variance(), rng=est_rng, bema_cfg=cfg.bema
    )
    return {m: (results[m].r_hat if m in results else None) for m in methods}


# -- aggregation --------------------------------------------------------------------


@dataclass(frozen=True)
class AccuracyRow:
    setting_id: str
    n: int
    p: int
    H_id: str
    r0: int
    lambda_r0: float
    method: str
    T: int
    hits: int
    failures: int
    mean_r_hat: float
    first_ok: bool | None = None
    second_ok: bool | None = None

    @property
    def hit_rate(self) -> float:
        return self.hits / self.T

    @property
    def gap_flag(self) -> str:
        if self.first_ok is None or self.second_ok is None:
            return ""
        return "T" if (self.first_ok and self.second_ok) else "F"


CSV_COLUMNS = (
    "setting", "n", "p", "c", "H", "r0", "lambda_r0", "method", "T", "hit_rate",
    "mean_r_hat", "failures", "gap_flag", "first_ok", "second_ok",
)


@dataclass
class AccuracyTable:
    rows: list[AccuracyRow] = field(default_factory=list)

    def extend(self, other: AccuracyTable) -> None:
        self.rows.extend(other.rows)

    def get(self, setting_id: str, method: str) -> AccuracyRow:
        for row in self.rows:
            if row.setting_id == setting_id and row.method == method:
                return row
        raise KeyError((setting_id, method))

    def hit_rates(self) -> dict[tuple[str, str], float]:
        return {(r.setting_id, r.method): r.hit_rate for r in self.rows}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            flag = lambda v: "" if v is None else ("T" if v else "F")  # noqa: E731
            w.writerow([
                r.setting_id, r.n, r.p, repr(r.p / r.n), r.H_id, r.r0, repr(float(r.lambda_r0)), r.method,
                r.T, f"{r.hit_rate:.6f}", "" if math.isnan(r.mean_r_hat) else f"{r.mean_r_hat:.6f}",
                r.failures, r.gap_flag, flag(r.first_ok), flag(r.second_ok),
            ])
        return buf.getvalue()


def _run_chunk(cfg: ScenarioConfig, methods: Sequence[str], indices: Sequence[int]) -> list[dict[str, int | None]]:
    with threadpool_limits(1):
        return [run_replication(cfg, methods, i) for i in indices]


def collect_replications(
    cfg: ScenarioConfig, methods: Sequence[str], threads: int = 1
) -> list[dict[str, int | None]]:
    """All ``T`` replications in index order."""
    indices = list(range(cfg.T))
    if threads <= 1 or cfg.T == 1:
        return _run_chunk(cfg, methods, indices)
    chunks = [indices[k::threads] for k in range(threads)]
    parts = Parallel(n_jobs=threads, backend="loky")(delayed(_run_chunk)(cfg, methods, ch) for ch in chunks)
    ordered: list[dict[str, int | None]] = [{}] * cfg.T
    for ch, res in zip(chunks, parts):
        for i, r in zip(ch, res):
            ordered[i] = r
    return ordered


def aggregate(cfg: ScenarioConfig, methods: Sequence[str], reps: Sequence[Mapping[str, int | None]]) -> AccuracyTable:
    """Hit rates (failures count as misses), mean r_hat over successes, and gap flags."""
    table = AccuracyTable()
    model = MPModel(cfg.p / cfg.n, cfg.H)
    for m in methods:
        values = [r.get(m) for r in reps]
        ok = [v for v in values if v is not None]
        hits = sum(1 for v in ok if v == cfg.r0)
        first = second = None
        if m in GAP_METHODS and cfg.r0 > 0:
            rep = check_gap(m, model, cfg.lambda_r0, cfg.n, cfg.p)
            first, second = rep.first_ok, rep.second_ok
        table.rows.append(AccuracyRow(
            cfg.setting_id, cfg.n, cfg.p, cfg.H_id, cfg.r0, cfg.lambda_r0, m, len(values), hits,
            len(values) - len(ok), float(np.mean(ok)) if ok else math.nan, first, second,
        ))
    return table


def run_study(cfg: ScenarioConfig, methods: Sequence[str], threads: int = 1) -> AccuracyTable:
    """Replicate a scenario ``cfg.T`` times and tabulate accuracy per method."""
    unknown = [m for m in methods if m not in ALL_METHODS]
    if unknown:
        raise ConfigError(f"unknown methods: {unknown}")
    return aggregate(cfg, methods, collect_replications(cfg, methods, threads))


def with_overrides(cfg: ScenarioConfig, **kw: Any) -> ScenarioConfig:
    return replace(cfg, **{k: v for k, v in kw.items() if v is not None})
