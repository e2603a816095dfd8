"""Population-side random-matrix quantities for the generalized Marchenko–Pastur law.

A population spectral distribution ``H`` together with an aspect ratio
``c = p/n`` determines the limiting spectral distribution ``F_{c,H}`` of a
sample covariance matrix.  This module evaluates everything the rank
estimators and gap analysis need from that pair:

* the first moment ``mu_H``;
* the spike map ``psi(lam) = lam * (1 + c * int t/(lam - t) dH(t))`` and its
  derivative;
* the support edges ``a`` and ``b`` of ``F_{c,H}`` (stationary points of psi);
* the Stieltjes transform of ``F_{c,H}`` and the bulk density;
* the GIC penalty limit ``kappa``;
* the population rank ``r0`` (number of spikes that separate from the bulk).

``H`` is represented as a finite set of atoms plus quadrature-weighted nodes
so that every integral against ``H`` becomes a weighted sum.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Mapping, Sequence

import numpy as np
from scipy import optimize, special, stats

from .errors import ConvergenceError, DomainError, UnknownDistributionError

__all__ = [
    "SpectralDistribution",
    "MPModel",
    "EdgeResult",
    "parse_distribution",
    "named_distribution",
    "mean_H",
    "psi",
    "psi_prime",
    "upper_edge",
    "lower_edge",
    "stieltjes",
    "mp_density",
    "kappa",
    "rank_r0",
]

QUADRATURE_NODES = 2000
_DOMAIN_RTOL = 1e-10
_BRACKET_DOUBLINGS = 60


@lru_cache(maxsize=8)
def _legendre(n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = special.roots_legendre(n_nodes)
    return x, w


def _gauss_legendre(lo: float, hi: float, n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _legendre(n_nodes)
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


@dataclass(frozen=True)
class SpectralDistribution:
    """Probability law on ``[support_lower, support_upper]``.

    The law is ``sum_i atom_masses[i] * delta(atom_locs[i])`` plus a smooth part
    discretised as ``sum_k node_weights[k] * delta(node_locs[k])``.
    """

    atom_locs: np.ndarray
    atom_masses: np.ndarray
    node_locs: np.ndarray
    node_weights: np.ndarray
    support_lower: float
    support_upper: float
    label: str = ""
    locations: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        atom_locs = np.asarray(self.atom_locs, dtype=float).reshape(-1)
        atom_masses = np.asarray(self.atom_masses, dtype=float).reshape(-1)
        node_locs = np.asarray(self.node_locs, dtype=float).reshape(-1)
        node_weights = np.asarray(self.node_weights, dtype=float).reshape(-1)
        if atom_locs.shape != atom_masses.shape or node_locs.shape != node_weights.shape:
            raise ValueError("locations and masses must have matching lengths")
        if atom_locs.size + node_locs.size == 0:
            raise ValueError("distribution needs at least one atom or node")
        if np.any(atom_masses <= 0) or np.any(atom_masses > 1) or np.any(node_weights <= 0):
            raise ValueError("atom masses must lie in (0, 1] and node weights must be positive")
        if np.unique(atom_locs).size != atom_locs.size:
            raise ValueError("atom locations must be distinct")
        if node_locs.size > 1 and np.any(np.diff(node_locs) < 0):
            raise ValueError("density nodes must be sorted ascending")
        lo, hi = float(self.support_lower), float(self.support_upper)
        if not (0.0 <= lo <= hi) or not math.isfinite(hi):
            raise ValueError("support must satisfy 0 <= lower <= upper < inf")
        locs = np.concatenate([atom_locs, node_locs])
        if np.any(locs < lo - 1e-12 * max(hi, 1.0)) or np.any(locs > hi + 1e-12 * max(hi, 1.0)):
            raise ValueError("all locations must lie inside the declared support")
        total = atom_masses.sum() + node_weights.sum()
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"total mass must be 1 (got {total!r})")
        for name, value in (
            ("atom_locs", atom_locs),
            ("atom_masses", atom_masses),
            ("node_locs", node_locs),
            ("node_weights", node_weights),
        ):
            value.setflags(write=False)
            object.__setattr__(self, name, value)
        weights = np.concatenate([atom_masses, node_weights])
        locs.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "support_lower", lo)
        object.__setattr__(self, "support_upper", hi)
        object.__setattr__(self, "locations", locs)
        object.__setattr__(self, "weights", weights)

    # -- constructors -------------------------------------------------
    @classmethod
    def point(cls, loc: float) -> SpectralDistribution:
        """Point mass at ``loc``."""
        loc = float(loc)
        if not (loc > 0 and math.isfinite(loc)):
            raise UnknownDistributionError("point mass location must be positive and finite")
        return cls(np.array([loc]), np.array([1.0]), np.empty(0), np.empty(0), loc, loc, f"point({loc:g})")

    @classmethod
    def beta(cls, alpha: float, beta: float, n_nodes: int = QUADRATURE_NODES) -> SpectralDistribution:
        """Beta(alpha, beta) law on [0, 1] discretised by Gauss–Legendre quadrature."""
        if not (alpha > 0 and beta > 0):
            raise UnknownDistributionError("beta shape parameters must be positive")
        x, w = _gauss_legendre(0.0, 1.0, n_nodes)
        weights = w * stats.beta.pdf(x, alpha, beta)
        keep = weights > 0
        x, weights = x[keep], weights[keep]
        weights = weights / weights.sum()
        return cls(np.empty(0), np.empty(0), x, weights, 0.0, 1.0, f"beta({alpha:g},{beta:g})")

    @classmethod
    def trunc_exp(cls, mean: float, cap: float, n_nodes: int = QUADRATURE_NODES) -> SpectralDistribution:
        """Law of ``min(L, cap)`` with ``L`` exponential of the given mean."""
        if not (mean > 0 and cap > 0):
            raise UnknownDistributionError("trunc_exp needs positive mean and cap")
        cap_mass = math.exp(-cap / mean)
        x, w = _gauss_legendre(0.0, cap, n_nodes)
        weights = w * np.exp(-x / mean) / mean
        weights = weights * ((1.0 - cap_mass) / weights.sum())
        return cls(np.array([cap]), np.array([cap_mass]), x, weights, 0.0, float(cap), f"trunc_exp({mean:g},{cap:g})")

    @classmethod
    def trunc_poisson(cls, rate: float, scale: float, cap: float, tail_tol: float = 1e-12) -> SpectralDistribution:
        """Law of ``min((L + 1) / scale, cap)`` with ``L`` Poisson(rate)."""
        if not (rate > 0 and scale > 0 and cap > 0):
            raise UnknownDistributionError("trunc_poisson needs positive rate, scale and cap")
        locs: list[float] = []
        masses: list[float] = []
        k = 0
        while True:
            loc = (k + 1) / scale
            tail = float(stats.poisson.sf(k - 1, rate))  # P(L >= k)
            if loc >= cap:
                locs.append(float(cap))
                masses.append(tail)
                break
            if tail < tail_tol:
                # fold the negligible remainder into the last atom
                masses[-1] += tail
                break
            locs.append(loc)
            masses.append(float(stats.poisson.pmf(k, rate)))
            k += 1
        loc_arr = np.array(locs)
        mass_arr = np.array(masses)
        keep = mass_arr > 0
        loc_arr, mass_arr = loc_arr[keep], mass_arr[keep]
        mass_arr = mass_arr / mass_arr.sum()
        return cls(
            loc_arr, mass_arr, np.empty(0), np.empty(0),
            float(loc_arr.min()), float(loc_arr.max()),
            f"trunc_poisson({rate:g},{scale:g},{cap:g})",
        )

    @classmethod
    def mixture(cls, components: Sequence[tuple[float, SpectralDistribution]]) -> SpectralDistribution:
        """Convex combination ``sum_i w_i H_i`` (weights renormalised to 1)."""
        if not components:
            raise UnknownDistributionError("mixture needs at least one component")
        total = float(sum(w for w, _ in components))
        if total <= 0 or any(w < 0 for w, _ in components):
            raise UnknownDistributionError("mixture weights must be nonnegative with positive sum")
        atoms: dict[float, float] = {}
        node_l: list[np.ndarray] = []
        node_w: list[np.ndarray] = []
        for w, dist in components:
            if w == 0:
                continue
            for loc, mass in zip(dist.atom_locs, dist.atom_masses):
                atoms[float(loc)] = atoms.get(float(loc), 0.0) + w / total * mass
            node_l.append(dist.node_locs)
            node_w.append(dist.node_weights * (w / total))
        nl = np.concatenate(node_l) if node_l else np.empty(0)
        nw = np.concatenate(node_w) if node_w else np.empty(0)
        order = np.argsort(nl, kind="stable")
        a_loc = np.array(sorted(atoms))
        a_mass = np.array([atoms[k] for k in sorted(atoms)])
        used = [d for w, d in components if w > 0]
        # renormalise to absorb roundoff in the weight arithmetic
        norm = a_mass.sum() + nw.sum()
        label = "mixture(" + ", ".join(f"{w:g}*{d.label}" for w, d in components) + ")"
        return cls(
            a_loc, a_mass / norm, nl[order], nw[order] / norm,
            min(d.support_lower for d in used), max(d.support_upper for d in used), label,
        )

    def scaled(self, factor: float) -> SpectralDistribution:
        """Law of ``factor * T`` for ``T ~ self``."""
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        return SpectralDistribution(
            self.atom_locs * factor, self.atom_masses.copy(), self.node_locs * factor,
            self.node_weights.copy(), self.support_lower * factor, self.support_upper * factor,
            f"{factor:g}*{self.label}",
        )

    def integrate(self, values: np.ndarray) -> Any:
        """``int f dH`` given ``values = f(self.locations)``."""
        return np.dot(self.weights, values)


# -- parsing --------------------------------------------------------------

_NAMED = {
    "H1": ("beta", (3.0, 3.0)),
    "H2": ("trunc_poisson", (24.0, 50.0, 1.0)),
    "H3": ("trunc_exp", (0.63, 1.0)),
    "H4": ("point", (1.0,)),
}


@lru_cache(maxsize=32)
def _build(kind: str, args: tuple[float, ...]) -> SpectralDistribution:
    ctor = {
        "beta": SpectralDistribution.beta,
        "trunc_poisson": SpectralDistribution.trunc_poisson,
        "trunc_exp": SpectralDistribution.trunc_exp,
        "point": SpectralDistribution.point,
    }.get(kind)
    if ctor is None:
        raise UnknownDistributionError(f"unknown distribution kind {kind!r}")
    arity = {"beta": 2, "trunc_poisson": 3, "trunc_exp": 2, "point": 1}[kind]
    if len(args) != arity:
        raise UnknownDistributionError(f"{kind} takes {arity} numeric arguments, got {len(args)}")
    return ctor(*args)


def named_distribution(name: str) -> SpectralDistribution:
    """One of the four benchmark laws ``H1``..``H4``."""
    try:
        kind, args = _NAMED[name]
    except KeyError:
        raise UnknownDistributionError(f"unknown distribution id {name!r}") from None
    return _build(kind, args)


def _number(node: ast.AST) -> float:
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_number(node.operand)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return float(node.value)
    raise UnknownDistributionError("expected a numeric literal")


def _from_ast(node: ast.AST) -> SpectralDistribution:
    if isinstance(node, ast.Name):
        return named_distribution(node.id)
    if not isinstance(node, ast.Call) or not isinstance(node.func, ast.Name) or node.keywords:
        raise UnknownDistributionError("expected kind(arg, ...)")
    kind = node.func.id
    if kind == "mixture":
        items = node.args
        if len(items) == 1 and isinstance(items[0], (ast.List, ast.Tuple)):
            items = list(items[0].elts)
        components = []
        for item in items:
            if not (isinstance(item, ast.BinOp) and isinstance(item.op, ast.Mult)):
                raise UnknownDistributionError("mixture components must be weight*dist")
            components.append((_number(item.left), _from_ast(item.right)))
        return SpectralDistribution.mixture(components)
    return _build(kind, tuple(_number(a) for a in node.args))


_DICT_ARGS = {
    "beta": ("alpha", "beta"),
    "trunc_poisson": ("rate", "scale", "cap"),
    "trunc_exp": ("mean", "cap"),
    "point": ("loc",),
}


def parse_distribution(spec: str | Mapping[str, Any] | SpectralDistribution) -> SpectralDistribution:
    """Build a :class:`SpectralDistribution` from a textual or structured description.

    Accepted forms::

        "H1" .. "H4"
        "beta(3,3)"  "trunc_poisson(24,50,1)"  "trunc_exp(0.63,1)"  "point(1)"
        "mixture(0.5*point(1), 0.5*beta(2,2))"
        {"kind": "beta", "alpha": 3, "beta": 3}
        {"kind": "mixture", "components": [{"weight": 0.5, "dist": {...}}, ...]}
    """
    if isinstance(spec, SpectralDistribution):
        return spec
    if isinstance(spec, Mapping):
        kind = spec.get("kind")
        if kind == "named":
            return named_distribution(str(spec.get("id")))
        if kind == "mixture":
            comps = spec.get("components")
            if not isinstance(comps, Sequence) or not comps:
                raise UnknownDistributionError("mixture needs a nonempty 'components' list")
            return SpectralDistribution.mixture(
                [(float(c["weight"]), parse_distribution(c["dist"])) for c in comps]
            )
        if kind not in _DICT_ARGS:
            raise UnknownDistributionError(f"unknown distribution kind {kind!r}")
        names = _DICT_ARGS[kind]
        extra = set(spec) - set(names) - {"kind"}
        if extra or any(n not in spec for n in names):
            raise UnknownDistributionError(f"{kind} expects exactly the keys {names}")
        return _build(kind, tuple(float(spec[n]) for n in names))
    if not isinstance(spec, str):
        raise UnknownDistributionError(f"cannot parse distribution from {type(spec).__name__}")
    try:
        tree = ast.parse(spec.strip(), mode="eval")
    except SyntaxError as exc:
        raise UnknownDistributionError(f"malformed distribution spec {spec!r}") from exc
    return _from_ast(tree.body)


# -- model and edge types -------------------------------------------------


@dataclass(frozen=True)
class MPModel:
    """Aspect ratio ``c`` and population law ``H`` defining ``F_{c,H}``."""

    c: float
    H: SpectralDistribution

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and self.c > 0):
            raise DomainError("aspect ratio c must be finite and positive")
        if self.H.support_upper <= 0:
            raise DomainError("H must not be concentrated at zero")


@dataclass(frozen=True)
class EdgeResult:
    """Support edge of ``F_{c,H}``.

    ``lambda_star`` is the stationary point of psi that generates ``edge``.
    When psi has no stationary point on the relevant side, ``stationary`` is
    False and ``lambda_star`` is the support endpoint of ``H``.
    ``mass_at_zero`` is ``1 - 1/c`` for ``c > 1`` (lower side only); the
    ``edge`` value then refers to the positive part of the spectrum.
    ``discarded_mass`` is the ``F``-mass of support components lying above an
    upper ``edge`` that was lowered past light islands (0 for the exact edge).
    """

    lambda_star: float
    edge: float
    side: str
    stationary: bool = True
    mass_at_zero: float = 0.0
    discarded_mass: float = 0.0

    @property
    def essential_infimum(self) -> float:
        """Smallest point of the support of ``F_{c,H}`` (0 when there is an atom at zero)."""
        if self.side != "lower":
            raise AttributeError("essential_infimum is defined for lower edges only")
        return 0.0 if self.mass_at_zero > 0 else self.edge


def mean_H(H: SpectralDistribution) -> float:
    """First moment of ``H``."""
    return float(H.integrate(H.locations))


def _check_outside(H: SpectralDistribution, lam: float) -> None:
    if not math.isfinite(lam):
        raise DomainError("lambda must be finite")
    dist = max(H.support_lower - lam, lam - H.support_upper)
    if dist <= _DOMAIN_RTOL * H.support_upper:
        raise DomainError(
            f"lambda={lam!r} lies within the support [{H.support_lower}, {H.support_upper}] of H"
        )


def _psi(model: MPModel, lam: float) -> float:
    t = model.H.locations
    return lam * (1.0 + model.c * float(model.H.integrate(t / (lam - t))))


def _psi_prime(model: MPModel, lam: float) -> float:
    t = model.H.locations
    return 1.0 - model.c * float(model.H.integrate((t / (lam - t)) ** 2))


def psi(model: MPModel, lam: float) -> float:
    """Spike map ``lam * (1 + c * int t / (lam - t) dH(t))`` for ``lam`` outside supp(H)."""
    lam = float(lam)
    _check_outside(model.H, lam)
    return _psi(model, lam)


def psi_prime(model: MPModel, lam: float) -> float:
    """Derivative ``1 - c * int t^2 / (lam - t)^2 dH(t)``."""
    lam = float(lam)
    _check_outside(model.H, lam)
    return _psi_prime(model, lam)


def _root(f, lo: float, hi: float) -> float:
    return optimize.brentq(f, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)


def upper_edge(model: MPModel, *, mass_tol: float = 0.0) -> EdgeResult:
    """Essential supremum ``b = psi(lambda_b)`` of ``F_{c,H}``.

    With ``mass_tol > 0``, isolated support components above the bulk whose
    total ``F``-mass is at most ``mass_tol`` are ignored, and the top of the
    remaining support is returned (see :func:`_drop_light_islands`).
    """
    if not (math.isfinite(mass_tol) and 0.0 <= mass_tol < 1.0):
        raise DomainError("mass_tol must lie in [0, 1)")
    ub = _exact_upper_edge(model)
    return _drop_light_islands(model, ub, mass_tol) if mass_tol > 0 else ub


def _drop_light_islands(model: MPModel, ub: EdgeResult, mass_tol: float) -> EdgeResult:
    """Lower the edge past gaps in the support that cut off at most ``mass_tol`` of ``F``.

    Between two consecutive atoms ``t_{k-1} < t_k`` of ``H`` (with no smooth
    part in between) psi' is concave; where its maximum is positive the support
    of ``F`` has a gap ``(psi(x1), psi(x2))`` with ``psi'(x1) = psi'(x2) = 0``,
    and exact separation puts ``H([t_k, inf))`` of the ``F``-mass above it.
    """
    H = model.H
    order = np.argsort(H.atom_locs)
    locs, masses = H.atom_locs[order], H.atom_masses[order]
    floor = float(H.node_locs.max()) if H.node_locs.size else -math.inf
    f = lambda x: _psi_prime(model, x)  # noqa: E731
    result = ub
    tail = 0.0
    for k in range(locs.size - 1, 0, -1):
        tail += float(masses[k])
        lo, hi = float(locs[k - 1]), float(locs[k])
        if tail > mass_tol or lo < floor:
            break
        peak = optimize.minimize_scalar(
            lambda x: -f(x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12 * hi}
        )
        if -peak.fun <= 0:
            continue
        a = lo + 1e-9 * (hi - lo)
        while f(a) >= 0:  # pragma: no cover - psi' tends to -inf at an atom
            a = lo + 0.5 * (a - lo)
        x1 = _root(f, a, float(peak.x))
        result = EdgeResult(x1, _psi(model, x1), "upper", discarded_mass=tail)
    return result


def _exact_upper_edge(model: MPModel) -> EdgeResult:
    H = model.H
    top = H.support_upper
    lo = top * (1.0 + 1e-8)
    f = lambda x: psi_prime(model, x)  # noqa: E731
    if f(lo) >= 0:
        return EdgeResult(lo, psi(model, lo), "upper", stationary=False)
    hi = max(top * (1.0 + math.sqrt(model.c)) * 10.0, lo * 2.0)
    for _ in range(_BRACKET_DOUBLINGS):
        if f(hi) > 0:
            break
        hi = top + 2.0 * (hi - top)
    else:
        raise ConvergenceError("no sign change of psi' above the support of H")
    lam_b = _root(f, lo, hi)
    return EdgeResult(lam_b, psi(model, lam_b), "upper")


def lower_edge(model: MPModel) -> EdgeResult:
    """Lower edge ``a = psi(lambda_a)`` of the positive part of ``F_{c,H}``.

    When psi' stays positive on ``(-inf, lower support of H)``, ``a`` is the
    limit of psi at the lower support point (0 if ``H`` reaches down to 0).
    """
    H = model.H
    bottom = H.support_lower
    mass0 = max(0.0, 1.0 - 1.0 / model.c)
    hi = bottom * (1.0 - 1e-8) if bottom > 0 else -1e-8 * H.support_upper
    f = lambda x: psi_prime(model, x)  # noqa: E731
    if f(hi) >= 0:
        edge = 0.0 if bottom == 0 else psi(model, hi)
        return EdgeResult(bottom, edge, "lower", stationary=False, mass_at_zero=mass0)
    width = max(H.support_upper * (1.0 + math.sqrt(model.c)) * 10.0, 1e-8)
    for _ in range(_BRACKET_DOUBLINGS):
        lo = hi - width
        if f(lo) > 0:
            break
        width *= 2.0
    else:
        raise ConvergenceError("no sign change of psi' below the support of H")
    lam_a = _root(f, lo, hi)
    return EdgeResult(lam_a, psi(model, lam_a), "lower", mass_at_zero=mass0)


def stieltjes(
    model: MPModel,
    z: complex,
    *,
    omega: float = 0.5,
    tol: float = 1e-12,
    max_iter: int = 50_000,
    s0: complex | None = None,
) -> complex:
    """Stieltjes transform ``s(z) = int (t - z)^-1 dF_{c,H}(t)``.

    Solves ``s = int 1 / (t (1 - c - c z s) - z) dH(t)`` by damped fixed-point
    iteration started at ``-1/z``.  ``z`` must have positive imaginary part or
    be real and above the upper edge.
    """
    z = complex(z)
    if z.imag < 0:
        raise DomainError("stieltjes needs Im z >= 0")
    if z.imag == 0 and z.real <= upper_edge(model).edge:
        raise DomainError("real z must lie above the upper edge b")
    c = model.c
    t = model.H.locations
    w = model.H.weights
    s = -1.0 / z if s0 is None else complex(s0)
    for _ in range(max_iter):
        new = (1.0 - omega) * s + omega * complex(np.dot(w, 1.0 / (t * (1.0 - c - c * z * s) - z)))
        if abs(new - s) < tol:
            s = new
            break
        s = new
    else:
        raise ConvergenceError(f"Stieltjes iteration did not converge at z={z}")
    if z.imag > 0 and s.imag < 0:
        s = complex(s.real, 0.0)
    return s


def mp_density(model: MPModel, x: float, *, edge: float | None = None) -> float:
    """Density of the continuous part of ``F_{c,H}`` at ``x > 0``.

    Uses Stieltjes inversion at two heights ``eps in {1e-3, 1e-4} * b`` and
    extrapolates linearly to ``eps = 0``.
    """
    x = float(x)
    if not x > 0:
        raise DomainError("density is evaluated at x > 0")
    b = upper_edge(model).edge if edge is None else edge
    e1, e2 = 1e-3 * b, 1e-4 * b
    s1 = stieltjes(model, complex(x, e1))
    s2 = stieltjes(model, complex(x, e2), s0=s1)
    d1, d2 = s1.imag / math.pi, s2.imag / math.pi
    d0 = d2 - e2 * (d1 - d2) / (e1 - e2)
    return max(d0, 0.0)


def _psi_inverse(model: MPModel, z: float, ub: EdgeResult) -> float:
    """Solve ``psi(lam) = z`` on the increasing branch ``lam >= lambda_b``."""
    if z <= ub.edge:
        return ub.lambda_star
    # psi(lam) > lam above the support, so the root lies below z
    hi = max(z, ub.lambda_star * (1.0 + 1e-12))
    return _root(lambda x: psi(model, x) - z, ub.lambda_star, hi)


def _kappa_from_stieltjes(model: MPModel, u: float, mu: float) -> float:
    z = u * mu
    s = stieltjes(model, complex(z, 0.0))
    return model.c * (u - 1.0) * (-1.0 - z * s.real)


def kappa(model: MPModel, u: float, *, method: str = "inverse", mass_tol: float = 0.0) -> float:
    """GIC penalty limit ``kappa(u) = c (u-1) int (t/mu)/(u - t/mu) dF_{c,H}(t)``, ``u >= b/mu_H``.

    ``method="inverse"`` (default) uses the closed form obtained from the
    companion Stieltjes transform on the real axis: writing ``u mu_H = psi(lam)``
    with ``lam >= lambda_b`` gives ``kappa(u) = (u - 1) (psi(lam)/lam - 1)``,
    which is exact also at the edge ``u = b/mu_H``.

    ``method="stieltjes"`` evaluates ``c (u-1) (-1 - z s(z))`` with ``z = u mu_H``
    from the fixed-point solver; at the edge it extrapolates from
    ``z = b(1 + delta)``, ``delta in {1e-2, 1e-3, 1e-4}``, in powers of sqrt(delta).

    ``mass_tol`` is passed to :func:`upper_edge`.  When light islands are
    dropped, ``kappa`` is also available exactly at the lowered edge, where
    the same closed form is evaluated at the lower stationary point bounding
    the gap; values of ``u mu_H`` inside the dropped islands are rejected.
    """
    u = float(u)
    mu = mean_H(model.H)
    if method not in ("inverse", "stieltjes"):
        raise ValueError(f"unknown kappa method {method!r}")
    ub = upper_edge(model)
    eff = upper_edge(model, mass_tol=mass_tol) if mass_tol > 0 else ub
    z = u * mu
    if not math.isfinite(u) or z < eff.edge * (1.0 - 1e-12):
        raise DomainError(f"kappa needs u >= b/mu_H = {eff.edge / mu!r}")
    if eff.discarded_mass > 0 and z < ub.edge * (1.0 - 1e-12):
        if method != "inverse":
            raise ValueError("the stieltjes route integrates over all of F and cannot drop islands")
        if z > eff.edge * (1.0 + 1e-12):
            raise DomainError(f"u mu_H = {z!r} lies inside the dropped part of the support")
        return (u - 1.0) * (eff.edge / eff.lambda_star - 1.0)
    if method == "inverse":
        lam = _psi_inverse(model, z, ub)
        return (u - 1.0) * (max(z, ub.edge) / lam - 1.0)
    u_edge = ub.edge / mu
    if u > u_edge * (1.0 + 1e-6):
        return _kappa_from_stieltjes(model, u, mu)
    deltas = np.array([1e-2, 1e-3, 1e-4])
    vals = np.array([_kappa_from_stieltjes(model, u_edge * (1.0 + d), mu) for d in deltas])
    h = np.sqrt(deltas)
    design = np.vander(h, 3, increasing=True)
    return float(np.linalg.solve(design, vals)[0])


def rank_r0(model: MPModel, spikes: Sequence[float]) -> int:
    """Number of leading population eigenvalues that separate from the bulk.

    Returns the largest ``j`` with ``spikes[j-1] > sup supp(H)`` and
    ``psi'(spikes[j-1]) > 0`` (infinite spikes count as separated).
    """
    top = model.H.support_upper
    r = 0
    for j, lam in enumerate(spikes, start=1):
        lam = float(lam)
        if lam == math.inf:
            r = j
            continue
        if lam - top > _DOMAIN_RTOL * top and psi_prime(model, lam) > 0:
            r = j
    return r
