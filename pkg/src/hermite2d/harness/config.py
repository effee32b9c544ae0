"""Campaign configuration: a TOML file with top-level settings and one
``[[suite]]`` table per suite.

    seed = 20240601
    not_converged = "warn"        # or "fail"

    [output]
    path = "report.json"
    format = "json"               # or "csv"

    [[suite]]
    id = "ks.real.identity"
    tolerance = 1e-7              # optional, catalog default otherwise
    metric = "rel"                # optional: rel | abs | bound
    [suite.params]                # optional overrides of the catalog defaults
    samples = 10
    [suite.truncation]            # optional TruncationPolicy fields
    max_degree = 30
    [suite.quadrature]            # optional
    points = 256
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from ..errors import ConfigError
from ..ks_series import TruncationPolicy

METRICS = ("rel", "abs", "bound")
FORMATS = ("json", "csv")


@dataclass(frozen=True)
class SuiteConfig:
    id: str
    tolerance: float
    metric: str
    params: dict
    truncation: Optional[TruncationPolicy] = None
    points: Optional[int] = None


@dataclass(frozen=True)
class CampaignConfig:
    suites: tuple[SuiteConfig, ...] = ()
    seed: int = 0
    output_path: Optional[str] = None
    output_format: str = "json"
    not_converged: str = "warn"
    jobs: int = 1
    source: Optional[str] = None


def default_config_path() -> Path:
    return Path(__file__).resolve().parent.parent / "configs" / "default.toml"


def _suite(raw: dict, catalog) -> SuiteConfig:
    if not isinstance(raw, dict) or "id" not in raw:
        raise ConfigError("every [[suite]] needs an id")
    sid = raw["id"]
    if sid not in catalog:
        raise ConfigError(f"unknown suite {sid!r}")
    spec = catalog[sid]
    extra = set(raw) - {"id", "tolerance", "metric", "params", "truncation", "quadrature"}
    if extra:
        raise ConfigError(f"{sid}: unknown keys {sorted(extra)}")

    tol = raw.get("tolerance", spec.tolerance)
    if not isinstance(tol, (int, float)) or not tol > 0:
        raise ConfigError(f"{sid}: tolerance must be a positive number")
    metric = raw.get("metric", spec.metric)
    if metric not in METRICS:
        raise ConfigError(f"{sid}: metric must be one of {METRICS}")

    params = dict(spec.defaults)
    for k, v in raw.get("params", {}).items():
        if k not in spec.defaults:
            raise ConfigError(f"{sid}: unknown parameter {k!r}")
        params[k] = v

    truncation = spec.truncation
    if "truncation" in raw:
        base = truncation.__dict__ if truncation else {}
        try:
            truncation = TruncationPolicy(**{**base, **raw["truncation"]})
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{sid}: bad truncation policy: {exc}") from exc

    points = spec.points
    if "quadrature" in raw:
        q = raw["quadrature"]
        if set(q) - {"points"}:
            raise ConfigError(f"{sid}: quadrature accepts only 'points'")
        points = q.get("points", points)
        if not isinstance(points, int) or points < 2:
            raise ConfigError(f"{sid}: quadrature points must be an integer >= 2")

    return SuiteConfig(sid, float(tol), metric, params, truncation, points)


def parse_config(data: dict, catalog, source: Optional[str] = None) -> CampaignConfig:
    known = {"seed", "not_converged", "output", "suite", "jobs"}
    extra = set(data) - known
    if extra:
        raise ConfigError(f"unknown top-level keys {sorted(extra)}")
    seed = data.get("seed", 0)
    if not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise ConfigError("seed must be an integer in [0, 2^64)")
    nc = data.get("not_converged", "warn")
    if nc not in ("warn", "fail"):
        raise ConfigError("not_converged must be 'warn' or 'fail'")
    jobs = data.get("jobs", 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise ConfigError("jobs must be a positive integer")
    out = data.get("output", {})
    fmt = out.get("format", "json")
    if fmt not in FORMATS:
        raise ConfigError(f"output format must be one of {FORMATS}")
    suites = tuple(_suite(s, catalog) for s in data.get("suite", []))
    ids = [s.id for s in suites]
    if len(set(ids)) != len(ids):
        raise ConfigError("suite ids must be unique within a campaign")
    return CampaignConfig(suites, seed, out.get("path"), fmt, nc, jobs, source)


def load_config(path, catalog) -> CampaignConfig:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    return parse_config(data, catalog, source=str(path))


def env_overrides(env=None) -> dict[str, Any]:
    """VERIFY_SEED and VERIFY_JOBS, if set."""
    env = os.environ if env is None else env
    out: dict[str, Any] = {}
    for key, name in (("seed", "VERIFY_SEED"), ("jobs", "VERIFY_JOBS")):
        if env.get(name):
            try:
                out[key] = int(env[name])
            except ValueError as exc:
                raise ConfigError(f"{name} must be an integer") from exc
    return out
