"""Finite-sample evaluation of the two gap conditions behind selection consistency.

For a criterion ``m`` with threshold function ``beta_m(u)``, rank selection is
consistent when

* first condition:  ``beta_m(psi_r0 / mu_H) < g(psi_r0 / mu_H)`` — the weakest
  spike is strong enough to be worth its penalty;
* second condition: ``g(b / mu_H) < beta_m(b / mu_H)`` — noise eigenvalues at
  the bulk edge are not worth theirs,

with ``g(u) = u - 1 - ln u``.  Only GIC has a ``beta`` that depends on ``u``
(``2 kappa(u)``); for the others both sides use the same constant.  The
thresholds are evaluated at the literal ``(n, p)`` of a setting with
``c = p / n``.

The bulk edge ``b`` is the top of the support of ``F_{c,H}`` after dropping
isolated support components of total mass at most ``1/p`` — parts of the
limiting spectrum that hold less than one eigenvalue in expectation at
dimension ``p``.  For laws with a density this is the usual supremum; for the
discrete law H2 at small ``c`` it removes a chain of islands generated by
far-tail atoms of ``H`` that no sample of that size populates.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import ConfigError, DomainError, RankSpectraError
from .rmt_core import MPModel, SpectralDistribution, kappa, mean_H, psi, upper_edge

__all__ = [
    "GAP_METHODS",
    "GapSetting",
    "GapReport",
    "GapRow",
    "g",
    "beta",
    "bulk_edge",
    "bulk_mass_tol",
    "check_gap",
    "gap_table",
    "gap_curves",
    "table_to_csv",
    "curves_to_csv",
]

GAP_METHODS = ("AIC", "BIC", "GIC", "PC1", "PC2", "PC3", "IC1", "IC2", "IC3")


def g(u: float) -> float:
    """``u - 1 - ln u`` for ``u > 0``."""
    if not u > 0:
        raise DomainError(f"g is defined for u > 0, got {u!r}")
    return u - 1.0 - math.log(u)


def _constant_beta(method: str, n: int, p: int) -> float:
    c = p / n
    m = min(n, p)
    if method == "AIC":
        return 2.0 * c
    if method == "BIC":
        return c * math.log(n)
    if method in ("PC1", "IC1"):
        return g((1.0 + c) * math.log(p / (1.0 + c)))
    if method in ("PC2", "IC2"):
        return g((1.0 + c) * math.log(m))
    if method in ("PC3", "IC3"):
        return g(max(1.0, c) * math.log(m))
    raise ConfigError(f"no gap threshold for method {method!r}")


def bulk_mass_tol(p: int) -> float:
    """Largest mass of a support component ignored when locating ``b`` at dimension ``p``."""
    return 1.0 / p


def bulk_edge(model: MPModel, p: int) -> float:
    """Bulk edge ``b`` used by the gap conditions at dimension ``p``."""
    return upper_edge(model, mass_tol=bulk_mass_tol(p)).edge


def beta(method: str, n: int, p: int, model: MPModel, u: float) -> float:
    """Penalty threshold ``beta_m(u)`` at sample size ``n`` and dimension ``p``."""
    if method == "GIC":
        return 2.0 * kappa(model, u, mass_tol=bulk_mass_tol(p))
    return _constant_beta(method, n, p)


@dataclass(frozen=True)
class GapReport:
    method: str
    first_ok: bool
    second_ok: bool
    values: dict[str, float]

    @property
    def ok(self) -> bool:
        return self.first_ok and self.second_ok

    @property
    def flag(self) -> str:
        return "T" if self.ok else "F"


def check_gap(method: str, model: MPModel, lambda_r0: float, n: int, p: int) -> GapReport:
    """Evaluate both gap conditions for ``method`` at the weakest spike ``lambda_r0``."""
    psi_r0 = psi(model, lambda_r0)
    b = bulk_edge(model, p)
    mu = mean_H(model.H)
    u_psi, u_b = psi_r0 / mu, b / mu
    g_psi, g_b = g(u_psi), g(u_b)
    if method == "GIC":
        beta_b = beta(method, n, p, model, u_b)
        # beyond the bulk edge kappa is defined; a spike that does not separate gets the edge value
        beta_psi = beta(method, n, p, model, max(u_psi, u_b))
    else:
        beta_psi = beta_b = beta(method, n, p, model, u_b)
    values = {
        "psi_r0": psi_r0, "b": b, "mu_H": mu, "g_psi": g_psi, "g_b": g_b,
        "beta_at_psi": beta_psi, "beta_at_b": beta_b,
    }
    return GapReport(method, beta_psi < g_psi, g_b < beta_b, values)


@dataclass(frozen=True)
class GapSetting:
    """A named ``(n, p, lambda_r0, H)`` combination; ``c = p / n``."""

    name: str
    n: int
    p: int
    lambda_r0: float
    H: SpectralDistribution

    @property
    def model(self) -> MPModel:
        return MPModel(self.p / self.n, self.H)


@dataclass
class GapRow:
    setting: GapSetting
    values: dict[str, float] = field(default_factory=dict)
    flags: dict[str, str] = field(default_factory=dict)
    error: str = ""


TABLE_VALUE_COLUMNS = (
    "psi_r0", "b", "mu_H", "g_psi", "g_b", "beta_AIC", "beta_BIC",
    "two_kappa_psi", "two_kappa_b", "beta_1", "beta_2", "beta_3",
)


def gap_table(settings: Iterable[GapSetting], methods: Sequence[str] = GAP_METHODS) -> list[GapRow]:
    """One row per setting: psi, b, mu_H, g values, every threshold, and per-method T/F flags.

    A setting whose ``lambda_r0`` falls inside the support of ``H`` (or that
    fails numerically) yields a row with ``error`` set and no values.
    """
    rows = []
    for s in settings:
        row = GapRow(s)
        try:
            model = s.model
            reports = {m: check_gap(m, model, s.lambda_r0, s.n, s.p) for m in methods}
            base = check_gap("GIC", model, s.lambda_r0, s.n, s.p)
            v = base.values
            row.values = {
                "psi_r0": v["psi_r0"], "b": v["b"], "mu_H": v["mu_H"], "g_psi": v["g_psi"], "g_b": v["g_b"],
                "beta_AIC": _constant_beta("AIC", s.n, s.p),
                "beta_BIC": _constant_beta("BIC", s.n, s.p),
                "two_kappa_psi": v["beta_at_psi"],
                "two_kappa_b": v["beta_at_b"],
                "beta_1": _constant_beta("PC1", s.n, s.p),
                "beta_2": _constant_beta("PC2", s.n, s.p),
                "beta_3": _constant_beta("PC3", s.n, s.p),
            }
            row.flags = {m: r.flag for m, r in reports.items()}
        except RankSpectraError as exc:
            row.error = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def table_to_csv(rows: Sequence[GapRow], methods: Sequence[str] = GAP_METHODS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["setting", "n", "p", "c", "lambda_r0", *TABLE_VALUE_COLUMNS, *(f"flag_{m}" for m in methods), "error"])
    for r in rows:
        s = r.setting
        vals = [f"{r.values[k]:.6f}" if k in r.values else "" for k in TABLE_VALUE_COLUMNS]
        flags = [r.flags.get(m, "") for m in methods]
        w.writerow([s.name, s.n, s.p, f"{s.p / s.n:.6g}", f"{s.lambda_r0:g}", *vals, *flags, r.error])
    return buf.getvalue()


def default_grid(model: MPModel, lam_max: float, points: int = 200) -> np.ndarray:
    """``points`` values from just above the larger of ``1.01 sup supp(H)`` and ``1.001 lambda_b``."""
    start = max(model.H.support_upper * 1.01, upper_edge(model).lambda_star * 1.001)
    if not lam_max > start:
        raise DomainError(f"grid maximum must exceed {start!r}")
    return np.linspace(start, lam_max, points)


def gap_curves(
    model: MPModel, lambda_grid: Sequence[float], n: int, p: int, methods: Sequence[str] = GAP_METHODS
) -> tuple[list[tuple[str, float, float]], list[float]]:
    """Long-format series behind the gap-condition plots.

    Returns ``(records, skipped)`` where records are ``(series, lambda, y)``:
    ``g_psi`` (``g(psi(lam)/mu_H)``), ``g_b`` (constant), ``beta_<m>`` for each
    constant-threshold method, and for GIC ``two_kappa_psi`` and ``two_kappa_b``.
    Grid points inside the support of H are skipped and returned in ``skipped``.
    """
    mu = mean_H(model.H)
    b = bulk_edge(model, p)
    u_b = b / mu
    g_b = g(u_b)
    const = {}
    for m in methods:
        if m != "GIC":
            key = {"PC1": "beta_1", "IC1": "beta_1", "PC2": "beta_2", "IC2": "beta_2",
                   "PC3": "beta_3", "IC3": "beta_3"}.get(m, f"beta_{m}")
            const[key] = _constant_beta(m, n, p)
    two_kappa_b = beta("GIC", n, p, model, u_b) if "GIC" in methods else None
    records: list[tuple[str, float, float]] = []
    skipped: list[float] = []
    for lam in lambda_grid:
        lam = float(lam)
        try:
            u = psi(model, lam) / mu
        except DomainError:
            skipped.append(lam)
            continue
        records.append(("g_psi", lam, g(u)))
        records.append(("g_b", lam, g_b))
        for key, val in const.items():
            records.append((key, lam, val))
        if two_kappa_b is not None:
            records.append(("two_kappa_psi", lam, beta("GIC", n, p, model, max(u, u_b))))
            records.append(("two_kappa_b", lam, two_kappa_b))
    return records, skipped


def curves_to_csv(records: Iterable[tuple[str, float, float]], extra: dict[str, Any] | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    keys = list(extra or {})
    w.writerow([*keys, "series", "lambda", "y"])
    for series, lam, y in records:
        w.writerow([*(extra or {}).values(), series, repr(lam), repr(y)])
    return buf.getvalue()
