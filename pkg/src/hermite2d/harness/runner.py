"""Campaign execution: corpus generation, evaluation, records and reports."""
from __future__ import annotations

import csv
import fnmatch
import io
import json
import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .. import __version__
from ..errors import (AsymmetryError, DivergentProduct, DomainViolation, IllConditioned,
                      NotPD, NotSPD, QuadratureUnderResolved, TruncationNotConverged,
                      ZeroParameter)
from ..q_series import RESOLVED_CONVENTIONS
from .config import CampaignConfig, SuiteConfig
from .suites import CATALOG, Settings

STATUSES = ("pass", "fail", "not_converged", "domain_skip")
RNG_ALGORITHM = "PCG64 via SeedSequence(seed, spawn_key=(crc32(corpus key),))"

# parameter points outside an identity's domain are skipped, not failed
DOMAIN_ERRORS = (DomainViolation, AsymmetryError, IllConditioned, ZeroParameter,
                 NotSPD, NotPD, DivergentProduct)
CONVERGENCE_ERRORS = (TruncationNotConverged, QuadratureUnderResolved)

# conventions resolved while building the checks, copied into every report
RESOLVED_FORMS = {
    **RESOLVED_CONVENTIONS,
    "complex_laguerre_factor": "(rho e^{-i theta})^{r-c}, i.e. conj(w)^{r-c}; the e^{+i theta} "
                               "orientation equals the left side with H transposed",
    "charlier_closed_form": "xy/(xy-uv) [exp(((u+v)xy - uv(x+y))/(xy-uv)) - exp(-uv(x+y)/(xy-uv)) "
                            "I0(2 sqrt(uv) xy/(xy-uv))]",
    "circle_representation": "m!n!/(m+n)! (1/2pi) int_0^{2pi} H_{m+n}((e^{i phi} z1 + e^{-i phi} z2)/2) "
                             "e^{i(n-m) phi} d phi; the half-angle integrand vanishes identically",
    "squared_hermite_average": "power rho^{4j}",
    "rotated_expansion": "phase i^{n-m} i^{j-k}, j <= m, k <= n",
    "complex_series_comparison": "lhs_complex carries det(I+H)^{-1} and is compared with the series directly",
}


def generator(seed: int, key: str) -> np.random.Generator:
    """Stream for one corpus; independent of suite order and filtering."""
    ss = np.random.SeedSequence(seed, spawn_key=(zlib.crc32(key.encode()),))
    return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    index: int
    params: dict
    lhs: Optional[complex]
    rhs: Optional[complex]
    abs_err: Optional[float]
    rel_err: Optional[float]
    error: Optional[float]
    effort: Optional[int]
    status: str
    wall_time: float = 0.0
    note: Optional[str] = None
    extra: Optional[dict] = None


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.ndarray):
        return _jsonable(v.tolist())
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (complex, np.complexfloating)):
        v = complex(v)
        if v.imag == 0:
            return _float(v.real)
        return {"re": _float(v.real), "im": _float(v.imag)}
    if isinstance(v, (float, np.floating)):
        return _float(float(v))
    return v


def _float(x: float):
    # JSON has no inf/nan; repr keeps them readable and round-trippable
    return x if math.isfinite(x) else repr(x)


def _error(metric: str, lhs, rhs, abs_err, rel_err) -> float:
    if metric == "rel":
        return rel_err
    if metric == "abs":
        return abs_err
    # bound: lhs is a quantity that must not exceed tolerance * rhs
    return abs(lhs) / abs(rhs)


def evaluate_case(sc: SuiteConfig, index: int, case: dict) -> CheckRecord:
    spec = CATALOG[sc.id]
    settings = Settings(sc.params, sc.truncation, sc.points)
    t0 = time.perf_counter()
    try:
        out = spec.evaluate(case, settings)
    except DOMAIN_ERRORS as exc:
        return CheckRecord(sc.id, index, case, None, None, None, None, None, None,
                           "domain_skip", time.perf_counter() - t0, f"{type(exc).__name__}: {exc}")
    except CONVERGENCE_ERRORS as exc:
        partial = getattr(exc, "partial", None)
        effort = getattr(partial, "degree_reached", None)
        return CheckRecord(sc.id, index, case, None, None, None, None, None, effort,
                           "not_converged", time.perf_counter() - t0, f"{type(exc).__name__}: {exc}")
    lhs, rhs = complex(out.lhs), complex(out.rhs)
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / (1 + abs(lhs))
    err = _error(sc.metric, lhs, rhs, abs_err, rel_err)
    ok = err <= sc.tolerance and all(e <= sc.tolerance for e in out.extra_errors.values())
    extra = {**out.extra, **{f"{k}_err": v for k, v in out.extra_errors.items()}} or None
    return CheckRecord(sc.id, index, case, lhs, rhs, abs_err, rel_err, err, out.effort,
                       "pass" if ok else "fail", time.perf_counter() - t0, None, extra)


def build_cases(sc: SuiteConfig, seed: int) -> list[dict]:
    spec = CATALOG[sc.id]
    corpus = spec.corpus
    if isinstance(corpus, tuple):
        rng = {k: generator(seed, k) for k in corpus}
    else:
        rng = generator(seed, corpus or sc.id)
    return spec.cases(sc.params, rng)


def _evaluate_chunk(args):
    sc, items = args
    return [evaluate_case(sc, i, c) for i, c in items]


def select(config: CampaignConfig, pattern: Optional[str]) -> CampaignConfig:
    if not pattern:
        return config
    return replace(config, suites=tuple(s for s in config.suites
                                        if fnmatch.fnmatchcase(s.id, pattern)))


@dataclass
class CampaignResult:
    config: CampaignConfig
    records: list
    suite_times: dict
    total_time: float

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for r in self.records:
            out[r.status] += 1
        return out

    def exit_code(self) -> int:
        c = self.counts()
        bad = c["fail"] + (c["not_converged"] if self.config.not_converged == "fail" else 0)
        return 1 if bad else 0


def run_campaign(config: CampaignConfig, jobs: Optional[int] = None) -> CampaignResult:
    """Run every suite; records come back in suite/case order whatever ``jobs`` is."""
    jobs = jobs or config.jobs
    t_start = time.perf_counter()
    work = []
    for sc in config.suites:
        cases = build_cases(sc, config.seed)
        work.append((sc, list(enumerate(cases))))

    records, suite_times = [], {}
    if jobs > 1 and work:
        # split large suites so a single slow suite does not serialize the pool
        chunks = []
        for sc, items in work:
            size = max(1, math.ceil(len(items) / jobs))
            chunks += [(sc, items[i:i + size]) for i in range(0, len(items), size)] or [(sc, [])]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for recs in pool.map(_evaluate_chunk, chunks):
                records += recs
        for r in records:
            suite_times[r.suite] = suite_times.get(r.suite, 0.0) + r.wall_time
    else:
        for sc, items in work:
            t0 = time.perf_counter()
            records += _evaluate_chunk((sc, items))
            suite_times[sc.id] = time.perf_counter() - t0
    return CampaignResult(config, records, suite_times, time.perf_counter() - t_start)


# -- reporting --------------------------------------------------------------

def _suite_summary(result: CampaignResult) -> list[dict]:
    out = []
    for sc in result.config.suites:
        recs = [r for r in result.records if r.suite == sc.id]
        errs = [r.error for r in recs if r.error is not None]
        counts = {s: sum(r.status == s for r in recs) for s in STATUSES}
        out.append({"id": sc.id, "tag": CATALOG[sc.id].tag, "metric": sc.metric,
                    "tolerance": sc.tolerance, "checks": len(recs), **counts,
                    "max_error": max(errs) if errs else None})
    return out


def metadata(result: CampaignResult) -> dict:
    cfg = result.config
    return {
        "package": "hermite2d", "version": __version__,
        "seed": cfg.seed, "rng": RNG_ALGORITHM,
        "rel_err": "abs_err / (1 + |lhs|)",
        "not_converged": cfg.not_converged,
        "resolved_conventions": RESOLVED_FORMS,
        "suites": [{"id": s.id, "params": s.params, "tolerance": s.tolerance, "metric": s.metric,
                    "truncation": None if s.truncation is None else vars(s.truncation),
                    "points": s.points} for s in cfg.suites],
    }


def record_dict(r: CheckRecord) -> dict:
    d = {"suite": r.suite, "index": r.index, "params": r.params, "lhs": r.lhs, "rhs": r.rhs,
         "abs_err": r.abs_err, "rel_err": r.rel_err, "error": r.error,
         "degree_or_points": r.effort, "status": r.status}
    if r.note:
        d["note"] = r.note
    if r.extra:
        d["extra"] = r.extra
    return _jsonable(d)


def report_payload(result: CampaignResult) -> dict:
    """Everything except wall times, which live in a separate ``timing`` section."""
    return {"metadata": metadata(result),
            "summary": {"counts": result.counts(), "exit_code": result.exit_code(),
                        "suites": _jsonable(_suite_summary(result))},
            "records": [record_dict(r) for r in result.records]}


def timing(result: CampaignResult) -> dict:
    return {"total_seconds": result.total_time,
            "suite_seconds": result.suite_times,
            "record_seconds": [r.wall_time for r in result.records]}


def to_json(result: CampaignResult, include_timing: bool = True) -> str:
    payload = report_payload(result)
    if include_timing:
        payload["timing"] = timing(result)
    return json.dumps(_jsonable(payload), indent=1, sort_keys=False) + "\n"


CSV_FIELDS = ("suite", "index", "status", "lhs", "rhs", "abs_err", "rel_err", "error",
              "degree_or_points", "params", "note", "wall_time")


def to_csv(result: CampaignResult, include_timing: bool = True) -> str:
    buf = io.StringIO()
    fields = CSV_FIELDS if include_timing else CSV_FIELDS[:-1]
    w = csv.DictWriter(buf, fields, lineterminator="\n")
    w.writeheader()
    for r in result.records:
        d = record_dict(r)
        row = {k: d.get(k) for k in fields}
        for k in ("lhs", "rhs"):
            row[k] = "" if r.__dict__[k] is None else repr(r.__dict__[k])
        row["params"] = json.dumps(d["params"], sort_keys=True)
        if include_timing:
            row["wall_time"] = f"{r.wall_time:.6f}"
        w.writerow(row)
    return buf.getvalue()


def write_report(result: CampaignResult, path: str, fmt: str = "json") -> None:
    text = to_json(result) if fmt == "json" else to_csv(result)
    with open(path, "w") as fh:
        fh.write(text)


def summary_lines(result: CampaignResult) -> list[str]:
    """One line per check, then one per suite, then a total."""
    lines = []
    for r in result.records:
        err = "-" if r.error is None else f"{r.error:.3e}"
        lines.append(f"{r.status:<13} {r.suite}[{r.index}] err={err}"
                     + ("" if r.effort is None else f" n={r.effort}"))
    for s in _suite_summary(result):
        worst = "-" if s["max_error"] is None else f"{s['max_error']:.3e}"
        lines.append(f"suite {s['id']}: {s['pass']}/{s['checks']} pass, {s['fail']} fail, "
                     f"{s['not_converged']} not_converged, {s['domain_skip']} domain_skip, "
                     f"max {s['metric']} err {worst} (tol {s['tolerance']:g})")
    c = result.counts()
    lines.append(f"total: {len(result.records)} checks, " + ", ".join(f"{c[k]} {k}" for k in STATUSES)
                 + f"; {result.total_time:.1f}s")
    return lines
