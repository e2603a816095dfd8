"""Versioned JSON scenario files shared by the ``simulate`` and ``gap`` commands.

Layout::

    {
      "schema_version": 1,
      "name": "study1_h1",
      "description": "...",
      "methods": ["AIC", "BIC", ...],
      "defaults": {<setting fields>},
      "settings": [{"id": "H1-01", <setting fields>}, ...]
    }

Setting fields: ``n``, ``p``, ``H``, ``r0``, ``lambda_r0``, ``spike_scheme``,
``gamma_scheme``, ``noise_law``, ``T``, ``master_seed``, ``q``, ``sigma2``,
``bema``.  Each setting is merged over ``defaults``; unknown keys anywhere are
rejected.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Sequence

import jsonschema

from .alt_estimators import BemaConfig
from .errors import ConfigError
from .simgen import ALL_METHODS, NOISE_LAWS, ScenarioConfig

__all__ = ["SCHEMA_VERSION", "SCHEMA", "StudyFile", "load_study", "parse_study", "list_presets", "resolve_config_path"]

SCHEMA_VERSION = 1

_SETTING_PROPS: dict[str, Any] = {
    "n": {"type": "integer", "minimum": 2},
    "p": {"type": "integer", "minimum": 1},
    "H": {"type": "string"},
    "r0": {"type": "integer", "minimum": 0},
    "lambda_r0": {"type": "number", "exclusiveMinimum": 0},
    "spike_scheme": {
        "oneOf": [
            {"type": "object", "additionalProperties": False, "required": ["kind"],
             "properties": {"kind": {"const": "uniform_shift"}}},
            {"type": "object", "additionalProperties": False, "required": ["kind", "lambda1"],
             "properties": {"kind": {"const": "explicit_lambda1"}, "lambda1": {"type": "number"}}},
            {"type": "object", "additionalProperties": False, "required": ["kind", "ratio"],
             "properties": {"kind": {"const": "geometric"}, "ratio": {"type": "number"}}},
        ]
    },
    "gamma_scheme": {
        "oneOf": [
            {"type": "object", "additionalProperties": False, "required": ["kind"],
             "properties": {"kind": {"const": "haar"}}},
            {"type": "object", "additionalProperties": False, "required": ["kind", "blocks"],
             "properties": {"kind": {"const": "block"}, "blocks": {"type": "integer", "minimum": 1}}},
        ]
    },
    "noise_law": {"enum": list(NOISE_LAWS)},
    "T": {"type": "integer", "minimum": 1},
    "master_seed": {"type": "integer", "minimum": 0, "maximum": 2**64 - 1},
    "q": {"type": "integer", "minimum": 1},
    "sigma2": {"oneOf": [{"enum": ["mu_H", "estimate"]}, {"type": "number", "exclusiveMinimum": 0}]},
    "bema": {
        "type": "object",
        "additionalProperties": False,
        "properties": {
            "alpha": {"type": "number"},
            "beta": {"type": "number"},
            "M": {"type": "integer"},
            "theta_grid": {"type": "array", "items": {"type": "number"}, "minItems": 1},
            "fit_draws": {"type": "integer"},
        },
    },
}

SCHEMA: dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "settings"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "description": {"type": "string"},
        "methods": {"type": "array", "items": {"enum": list(ALL_METHODS)}, "uniqueItems": True},
        "defaults": {"type": "object", "additionalProperties": False, "properties": _SETTING_PROPS},
        "settings": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id"],
                "properties": {"id": {"type": "string", "minLength": 1}, **_SETTING_PROPS},
            },
        },
    },
}

_REQUIRED = ("n", "p", "H", "r0", "lambda_r0")


@dataclass(frozen=True)
class StudyFile:
    name: str
    methods: tuple[str, ...]
    raw_settings: tuple[dict[str, Any], ...]
    digest: str

    def scenarios(self, *, T: int | None = None, master_seed: int | None = None) -> list[ScenarioConfig]:
        out = []
        for s in self.raw_settings:
            s = dict(s)
            if T is not None:
                s["T"] = T
            if master_seed is not None:
                s["master_seed"] = master_seed
            out.append(_scenario(s))
        return out


def _scenario(s: Mapping[str, Any]) -> ScenarioConfig:
    missing = [k for k in _REQUIRED if k not in s]
    if missing:
        raise ConfigError(f"setting {s.get('id')!r} lacks {missing}")
    spike = s.get("spike_scheme", {"kind": "uniform_shift"})
    gamma = s.get("gamma_scheme", {"kind": "haar"})
    kwargs: dict[str, Any] = dict(
        setting_id=s["id"], n=s["n"], p=s["p"], H_id=s["H"], r0=s["r0"], lambda_r0=float(s["lambda_r0"]),
        spike_scheme=spike["kind"], lambda1=spike.get("lambda1"), ratio=spike.get("ratio"),
        gamma_scheme=gamma["kind"], blocks=gamma.get("blocks"),
    )
    for key in ("noise_law", "T", "master_seed", "q", "sigma2"):
        if key in s:
            kwargs[key] = s[key]
    if "bema" in s:
        b = dict(s["bema"])
        if "theta_grid" in b:
            b["theta_grid"] = tuple(float(t) for t in b["theta_grid"])
        kwargs["bema"] = BemaConfig(**b)
    return ScenarioConfig(**kwargs)


def canonical_digest(doc: Any) -> str:
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def parse_study(doc: Any) -> StudyFile:
    """Validate a decoded JSON document and merge defaults into each setting."""
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"config invalid at {where}: {exc.message}") from None
    defaults = doc.get("defaults", {})
    merged = tuple({**defaults, **s} for s in doc["settings"])
    ids = [s["id"] for s in merged]
    if len(set(ids)) != len(ids):
        raise ConfigError("setting ids must be unique")
    methods = tuple(doc.get("methods", ALL_METHODS))
    return StudyFile(doc.get("name", ""), methods, merged, canonical_digest(doc))


def list_presets() -> list[str]:
    root = resources.files("rankspectra") / "presets"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


_ALIASES = {"h1_study1": "study1_h1", "h2_study1": "study1_h2", "h3_study1": "study1_h3"}


def resolve_config_path(name_or_path: str) -> Path | Any:
    """A filesystem path, or the name of a bundled preset (with or without ``.json``)."""
    p = Path(name_or_path)
    if p.exists():
        return p
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    stem = _ALIASES.get(stem, stem)
    res = resources.files("rankspectra") / "presets" / f"{stem}.json"
    if res.is_file():
        return res
    raise ConfigError(f"no config file or preset named {name_or_path!r} (presets: {', '.join(list_presets())})")


def load_study(name_or_path: str) -> StudyFile:
    src = resolve_config_path(name_or_path)
    try:
        doc = json.loads(src.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{name_or_path}: not valid JSON ({exc})") from None
    return parse_study(doc)


def study_methods(study: StudyFile, override: Sequence[str] | None) -> tuple[str, ...]:
    if not override:
        return study.methods
    bad = [m for m in override if m not in ALL_METHODS]
    if bad:
        raise ConfigError(f"unknown methods: {bad}")
    return tuple(override)
