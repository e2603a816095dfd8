"""Command-line interface: ``estimate``, ``mp``, ``gap``, ``simulate`` and ``presets``.

Exit codes: 0 success, 2 invalid input or configuration, 3 numerical failure,
4 a simulation setting aborted.  Output files are written to a temporary file
and renamed into place, so a failed run never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from . import __version__
from .config import canonical_digest, list_presets, load_study, study_methods
from .criteria import CRITERIA, default_q
from .errors import ConfigError, NumericError, RankSpectraError, ValidationError
from .gap_analyzer import GAP_METHODS, GapSetting, curves_to_csv, default_grid, gap_curves, gap_table, table_to_csv
from .rmt_core import (
    MPModel,
    kappa,
    lower_edge,
    mean_H,
    mp_density,
    parse_distribution,
    psi,
    psi_prime,
    upper_edge,
)
from .simgen import ALL_METHODS, GENERATOR_NAME, AccuracyTable, estimate_ranks, run_study, spectrum_estimates
from .spectra import read_binary_matrix, read_csv_matrix, read_eigenvalue_file

__all__ = ["main", "build_parser", "write_atomic", "RunManifest"]

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC, EXIT_ABORTED = 0, 2, 3, 4
SPECTRUM_ONLY = CRITERIA + ("ED", "ON", "ER", "GR")
DEFAULT_DATA_METHODS = CRITERIA + ("ACT", "DPA", "ED", "ON", "ER", "GR")
THREADS_ENV = "RANKSPECTRA_THREADS"


class CommandError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def write_atomic(path: str | Path, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary sibling file and an atomic rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


@dataclass
class RunManifest:
    """Provenance record written next to every output set."""

    command: list[str]
    config_digest: str
    master_seed: int | None = None
    threads: int = 1
    generator: str = GENERATOR_NAME
    version: str = __version__
    numpy_version: str = np.__version__
    timings: dict[str, float] = field(default_factory=dict)
    outputs: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        d = {k: v for k, v in self.__dict__.items() if k != "extra"}
        d.update(self.extra)
        return json.dumps(d, indent=2, sort_keys=True) + "\n"


def _methods_arg(text: str | None) -> list[str] | None:
    if text is None:
        return None
    methods = [m.strip().upper() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in ALL_METHODS]
    if bad or not methods:
        raise ConfigError(f"unknown methods {bad}; choose from {', '.join(ALL_METHODS)}")
    return methods


def _number(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{what} must be a number, got {text!r}") from None


# -- estimate -----------------------------------------------------------------------


def cmd_estimate(args: argparse.Namespace) -> int:
    methods = _methods_arg(args.methods)
    sigma2 = None
    if args.sigma2 is not None and args.sigma2 != "estimate":
        try:
            sigma2 = float(args.sigma2)
        except ValueError:
            raise ConfigError("--sigma2 must be a positive number or 'estimate'") from None
        if not (sigma2 > 0 and math.isfinite(sigma2)):
            raise ConfigError("--sigma2 must be a positive number or 'estimate'")
    errors: dict[str, Exception] = {}
    if args.from_eigenvalues:
        methods = methods or list(SPECTRUM_ONLY)
        unavailable = [m for m in methods if m not in SPECTRUM_ONLY]
        if unavailable:
            raise ConfigError(f"{unavailable} need the data matrix, not only eigenvalues")
        spec = read_eigenvalue_file(args.input)
        q = default_q(spec.n, spec.p) if args.q is None else args.q
        from .criteria import EstimatorConfig, estimate_all

        cfg = EstimatorConfig(q=q, noise_variance=sigma2)
        results = dict(estimate_all(spec, cfg, [m for m in methods if m in CRITERIA], errors))
        for m in methods:
            if m not in CRITERIA:
                try:
                    results.update(spectrum_estimates(spec, [m], q))
                except RankSpectraError as exc:
                    errors[m] = exc
        n, p = spec.n, spec.p
    else:
        methods = methods or list(DEFAULT_DATA_METHODS)
        X = read_binary_matrix(args.input) if args.binary else read_csv_matrix(args.input)
        rng = np.random.Generator(np.random.PCG64(args.seed))
        results = estimate_ranks(
            X, methods, q=args.q, noise_variance=sigma2, rng=rng, errors=errors,
            centered=not args.uncentered, divisor=args.cov_divisor,
        )
        n, p = X.shape
    if errors:
        for m, exc in errors.items():
            print(f"error: {m}: {type(exc).__name__}: {exc}", file=sys.stderr)
        code = EXIT_INVALID if any(isinstance(e, ValidationError) for e in errors.values()) else EXIT_NUMERIC
        raise CommandError(code, f"{len(errors)} method(s) failed; no output written")
    ordered = [results[m] for m in methods]
    if args.format == "csv":
        lines = ["method,r_hat,q,r,value"]
        for est in ordered:
            for r, v in enumerate(np.asarray(est.curve, dtype=float).tolist()):
                lines.append(f"{est.method},{est.r_hat},{est.q},{r},{v!r}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps({"n": n, "p": p, "results": [e.to_record() for e in ordered]}, indent=2) + "\n"
    if args.out:
        write_atomic(args.out, text)
        manifest = RunManifest(
            command=list(args.argv), config_digest=canonical_digest(vars_for_digest(args)),
            master_seed=args.seed, outputs=[str(args.out)],
        )
        write_atomic(f"{args.out}.manifest.json", manifest.to_json())
    else:
        sys.stdout.write(text)
    return EXIT_OK


def vars_for_digest(args: argparse.Namespace) -> dict[str, Any]:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "argv") and not callable(v)}


# -- mp -----------------------------------------------------------------------------


def _mp_model(args: argparse.Namespace) -> MPModel:
    return MPModel(float(args.c), parse_distribution(args.H))


def cmd_mp(args: argparse.Namespace) -> int:
    model = _mp_model(args)
    report: dict[str, Any] = {"c": model.c, "H": args.H, "query": args.query}
    if args.query == "edges":
        ub, lb = upper_edge(model, mass_tol=args.mass_tol), lower_edge(model)
        report.update({
            "b": ub.edge, "lambda_b": ub.lambda_star, "a": lb.edge, "mass_at_zero": lb.mass_at_zero,
            "mu_H": mean_H(model.H),
        })
        if args.mass_tol > 0:
            report.update({"mass_tol": args.mass_tol, "discarded_mass": ub.discarded_mass})
    elif args.query in ("psi", "psi-prime", "kappa"):
        if args.value is None:
            raise ConfigError(f"{args.query} needs a value")
        v = _number(args.value, args.query)
        fn: Callable[[MPModel, float], float] = {
            "psi": psi, "psi-prime": psi_prime, "kappa": lambda mod, x: kappa(mod, x, mass_tol=args.mass_tol),
        }[args.query]
        report.update({"value": v, "result": fn(model, v)})
    elif args.query == "density":
        if args.grid is not None:
            lo, hi, num = _grid(args.grid)
            xs = np.linspace(lo, hi, num)
        elif args.value is not None:
            xs = np.array([_number(args.value, 'density')])
        else:
            raise ConfigError("density needs a value or --grid lo,hi,num")
        edge = upper_edge(model).edge
        report["density"] = [{"x": float(x), "f": mp_density(model, float(x), edge=edge)} for x in xs]
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _grid(text: str) -> tuple[float, float, int]:
    try:
        lo, hi, num = text.split(",")
        out = float(lo), float(hi), int(num)
    except ValueError:
        raise ConfigError("--grid must be 'lo,hi,num'") from None
    if not (out[1] > out[0] and out[2] >= 1):
        raise ConfigError("--grid needs hi > lo and num >= 1")
    return out


# -- gap ----------------------------------------------------------------------------


def _gap_settings(args: argparse.Namespace) -> tuple[list[GapSetting], str]:
    if args.setting:
        study = load_study(args.setting)
        out = []
        for s in study.raw_settings:
            missing = [k for k in ("n", "p", "H", "lambda_r0") if k not in s]
            if missing:
                raise ConfigError(f"setting {s['id']!r} lacks {missing}")
            out.append(GapSetting(s["id"], int(s["n"]), int(s["p"]), float(s["lambda_r0"]), parse_distribution(s["H"])))
        return out, study.digest
    needed = {"--n": args.n, "--p": args.p, "--H": args.H, "--lambda": args.lam}
    missing = [k for k, v in needed.items() if v is None]
    if missing:
        raise ConfigError(f"give --setting FILE or all of {', '.join(needed)} (missing {', '.join(missing)})")
    if args.c is not None and not math.isclose(args.c, args.p / args.n, rel_tol=1e-9):
        raise ConfigError(f"--c {args.c} disagrees with p/n = {args.p / args.n}")
    if args.n < 1 or args.p < 1:
        raise ConfigError("--n and --p must be positive")
    s = GapSetting(args.name, args.n, args.p, args.lam, parse_distribution(args.H))
    return [s], canonical_digest({"n": args.n, "p": args.p, "H": args.H, "lambda": args.lam})


def cmd_gap(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    methods = _methods_arg(args.methods) or list(GAP_METHODS)
    bad = [m for m in methods if m not in GAP_METHODS]
    if bad:
        raise ConfigError(f"no gap conditions for {bad}")
    settings, digest = _gap_settings(args)
    rows = gap_table(settings, methods)
    table_csv = table_to_csv(rows, methods)
    t1 = time.perf_counter()
    # one curve set per (n, p, H) group, up to 1.25 x the largest lambda_r0 of the group
    groups: dict[tuple[int, int, str], list[GapSetting]] = {}
    for s in settings:
        groups.setdefault((s.n, s.p, s.H.label), []).append(s)
    parts = []
    skipped_total = 0
    for (n, p, label), members in groups.items():
        model = members[0].model
        lam_max = args.lambda_max or 1.25 * max(m.lambda_r0 for m in members)
        try:
            grid = default_grid(model, lam_max, args.points)
        except RankSpectraError as exc:
            print(f"warning: no curves for n={n}, p={p}, H={label}: {exc}", file=sys.stderr)
            continue
        records, skipped = gap_curves(model, grid, n, p, methods)
        skipped_total += len(skipped)
        text = curves_to_csv(records, {"n": n, "p": p, "H": label})
        parts.append(text if not parts else text.split("\n", 1)[1])
    curves_csv = "".join(parts) if parts else "n,p,H,series,lambda,y\n"
    t2 = time.perf_counter()
    out = Path(args.out)
    write_atomic(out / "gap_table.csv", table_csv)
    write_atomic(out / "gap_curves.csv", curves_csv)
    manifest = RunManifest(
        command=list(args.argv), config_digest=digest,
        timings={"table_seconds": t1 - t0, "curves_seconds": t2 - t1},
        outputs=[str(out / "gap_table.csv"), str(out / "gap_curves.csv")],
        extra={"flagged_settings": [r.setting.name for r in rows if r.error], "skipped_grid_points": skipped_total},
    )
    write_atomic(out / "manifest.json", manifest.to_json())
    for r in rows:
        if r.error:
            print(f"warning: setting {r.setting.name}: {r.error}", file=sys.stderr)
    if not args.quiet:
        sys.stdout.write(table_csv)
    return EXIT_OK


# -- simulate -----------------------------------------------------------------------


def _threads(value: int | None) -> int:
    if value is None:
        env = os.environ.get(THREADS_ENV)
        if env is None:
            return 1
        try:
            value = int(env)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if value < 1:
        raise ConfigError("thread count must be at least 1")
    return value


def cmd_simulate(args: argparse.Namespace) -> int:
    threads = _threads(args.threads)
    study = load_study(args.config)
    methods = study_methods(study, _methods_arg(args.methods))
    scenarios = study.scenarios(T=args.T, master_seed=args.seed)
    if args.only:
        wanted = set(args.only.split(","))
        unknown = wanted - {s.setting_id for s in scenarios}
        if unknown:
            raise ConfigError(f"unknown setting ids {sorted(unknown)}")
        scenarios = [s for s in scenarios if s.setting_id in wanted]
    table = AccuracyTable()
    timings: dict[str, float] = {}
    aborted: dict[str, str] = {}
    for sc in scenarios:
        t0 = time.perf_counter()
        try:
            part = run_study(sc, methods, threads=threads)
        except RankSpectraError as exc:
            aborted[sc.setting_id] = f"{type(exc).__name__}: {exc}"
            print(f"error: setting {sc.setting_id} aborted: {exc}", file=sys.stderr)
            continue
        if all(r.failures == r.T for r in part.rows):
            aborted[sc.setting_id] = "every replication failed for every method"
        table.extend(part)
        timings[sc.setting_id] = time.perf_counter() - t0
        if args.verbose:
            print(f"{sc.setting_id}: {timings[sc.setting_id]:.1f}s", file=sys.stderr)
    out = Path(args.out)
    write_atomic(out / "accuracy.csv", table.to_csv())
    seeds = sorted({sc.master_seed for sc in scenarios})
    manifest = RunManifest(
        command=list(args.argv), config_digest=study.digest,
        master_seed=seeds[0] if len(seeds) == 1 else None, threads=threads, timings=timings,
        outputs=[str(out / "accuracy.csv")],
        extra={"config": study.name, "methods": list(methods), "T": sorted({sc.T for sc in scenarios}),
               "aborted": aborted},
    )
    write_atomic(out / "manifest.json", manifest.to_json())
    return EXIT_ABORTED if aborted else EXIT_OK


def cmd_presets(args: argparse.Namespace) -> int:
    for name in list_presets():
        print(name)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankspectra", description="Rank estimation for spiked covariance models.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    e = sub.add_parser("estimate", help="estimate the number of spikes from data or eigenvalues")
    e.add_argument("input", help="CSV data matrix (n rows, p columns), binary matrix, or eigenvalue file")
    e.add_argument("--methods", help=f"comma-separated subset of {','.join(ALL_METHODS)}")
    e.add_argument("--q", type=int, help="largest candidate rank (default floor(2 sqrt(min(n, p))))")
    e.add_argument("--sigma2", help="noise variance for PC criteria, or 'estimate' (default)")
    e.add_argument("--cov-divisor", choices=("n", "n-1"), default="n-1")
    e.add_argument("--uncentered", action="store_true", help="do not subtract column means")
    src = e.add_mutually_exclusive_group()
    src.add_argument("--from-eigenvalues", action="store_true", help="input is an eigenvalue file")
    src.add_argument("--binary", action="store_true", help="input is a binary matrix")
    fmt = e.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    e.add_argument("--seed", type=int, default=0, help="seed for BEMA's Monte Carlo steps")
    e.add_argument("--out", help="output file (default stdout)")
    e.set_defaults(func=cmd_estimate, format="json")

    m = sub.add_parser("mp", help="generalized Marchenko-Pastur quantities")
    m.add_argument("--c", type=float, required=True)
    m.add_argument("--H", required=True, help="e.g. H1, beta(3,3), point(1), 'mixture(0.5*point(1), 0.5*point(3))'")
    m.add_argument("query", choices=("edges", "psi", "psi-prime", "kappa", "density"))
    m.add_argument("value", nargs="?")
    m.add_argument("--grid", help="lo,hi,num for density")
    m.add_argument(
        "--mass-tol", type=float, default=0.0,
        help="ignore isolated support components of at most this mass when locating b (edges, kappa)",
    )
    m.set_defaults(func=cmd_mp)

    g = sub.add_parser("gap", help="gap-condition table and curves")
    g.add_argument("--setting", help="scenario JSON file or preset name")
    g.add_argument("--c", type=float, help="optional; must equal p/n")
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=int)
    g.add_argument("--H")
    g.add_argument("--lambda", dest="lam", type=float)
    g.add_argument("--name", default="setting")
    g.add_argument("--methods")
    g.add_argument("--points", type=int, default=200)
    g.add_argument("--lambda-max", type=float)
    g.add_argument("--out", default=".")
    g.add_argument("--quiet", action="store_true")
    g.set_defaults(func=cmd_gap)

    s = sub.add_parser("simulate", help="replicated accuracy study from a scenario file")
    s.add_argument("--config", required=True, help="scenario JSON file or preset name")
    s.add_argument("--T", type=int, help="override replications per setting")
    s.add_argument("--threads", type=int, help=f"worker processes (fallback ${THREADS_ENV}, else 1)")
    s.add_argument("--seed", type=int, help="override master seed")
    s.add_argument("--methods")
    s.add_argument("--only", help="comma-separated setting ids to run")
    s.add_argument("--out", required=True)
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_simulate)

    pr = sub.add_parser("presets", help="list bundled scenario files")
    pr.set_defaults(func=cmd_presets)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    args.argv = ["rankspectra", *argv]
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
