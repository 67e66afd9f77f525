"""End-to-end checks: digits -> profiles -> exponents -> continued fraction -> bounds.

Verdict semantics
-----------------
Pointwise inequalities (``p(n) >= r(n) - n``, ``r(n+1) >= r(n) + 1``,
``r(n) >= n + 1``) hold for every finite prefix, so a failure is reported
as ``violated``.  The liminf/limsup bounds are asymptotic: a finite window
can agree with them (``consistent``) or not (``inconclusive``), but never
refute them.  A bound that says nothing beyond the trivial one is
``vacuous``.
"""
from __future__ import annotations

import datetime as _dt
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import analysis, diophantine
from .analysis import ComplexityProfile, ReturnProfile, fmt_decimal
from .expansions import (
    DEFAULT_MAX_PRECISION,
    CertifiedDigits,
    ExpansionError,
    ConstantSpec,
    generate_digits,
    parse_spec,
)
from .words import atomic_write_text

CONSISTENT, VIOLATED, VACUOUS, INCONCLUSIVE = "consistent", "violated", "vacuous", "inconclusive"
POINTWISE, ASYMPTOTIC = "pointwise", "asymptotic"
MIN_PRECISION_CAP = 2**16


def _num(x) -> dict | None:
    if x is None:
        return None
    if x == diophantine.INFINITE:
        return {"exact": "inf", "decimal": "inf"}
    x = Fraction(x)
    exact = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return {"exact": exact, "decimal": fmt_decimal(x)}


def _parse_window(text: str) -> tuple[int, int]:
    lo, hi = text.split(":")
    return int(lo), int(hi)


@dataclass(frozen=True)
class VerificationCase:
    spec: ConstantSpec
    base: int
    digit_count: int
    n_max: int
    window: tuple[int, int] | None = None
    mu_hint: Fraction | None = None

    def __post_init__(self):
        if not 1 <= self.n_max < self.digit_count:
            raise ValueError(f"need 1 <= n_max < digit_count, got {self.n_max}, {self.digit_count}")
        if self.window is not None:
            lo, hi = self.window
            if not 1 <= lo <= hi <= self.n_max:
                raise ValueError(f"window {self.window} not inside [1, {self.n_max}]")
        if self.mu_hint is not None:
            object.__setattr__(self, "mu_hint", Fraction(self.mu_hint))

    @property
    def effective_window(self) -> tuple[int, int]:
        return self.window or analysis.default_window(self.n_max)

    @property
    def label(self) -> str:
        return f"{self.spec.canonical} base={self.base} digits={self.digit_count}"

    def to_json(self) -> dict:
        return {
            "spec": self.spec.canonical,
            "base": self.base,
            "digit_count": self.digit_count,
            "n_max": self.n_max,
            "window": list(self.effective_window),
            "mu_hint": _num(self.mu_hint),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "VerificationCase":
        window = obj.get("window")
        if isinstance(window, str):
            window = _parse_window(window)
        hint = obj.get("mu_hint")
        if isinstance(hint, dict):  # the report's {"exact", "decimal"} form
            hint = hint["exact"]
        return cls(
            spec=parse_spec(obj["const"] if "const" in obj else obj["spec"]),
            base=int(obj["base"]),
            digit_count=int(obj.get("digits", obj.get("digit_count"))),
            n_max=int(obj.get("nmax", obj.get("n_max"))),
            window=tuple(window) if window else None,
            mu_hint=Fraction(str(hint)) if hint is not None else None,
        )


@dataclass
class RunConfig:
    cache_dir: Path | None = None
    precision_cap: int = DEFAULT_MAX_PRECISION
    output_dir: Path | None = None
    cases: list[VerificationCase] = field(default_factory=list)
    workers: int = 1

    def __post_init__(self):
        if self.precision_cap < MIN_PRECISION_CAP:
            raise ValueError(f"precision cap must be >= {MIN_PRECISION_CAP} bits")
        self.cache_dir = Path(self.cache_dir) if self.cache_dir else None
        self.output_dir = Path(self.output_dir) if self.output_dir else None


def load_config(path: str | Path) -> RunConfig:
    raw = json.loads(Path(path).read_text())
    return RunConfig(
        cache_dir=raw.get("cache_dir"),
        precision_cap=int(raw.get("precision_cap", DEFAULT_MAX_PRECISION)),
        output_dir=raw.get("output_dir"),
        cases=[VerificationCase.from_json(c) for c in raw.get("cases", [])],
        workers=int(raw.get("workers", 1)),
    )


@dataclass
class Verdict:
    name: str
    kind: str
    status: str
    measured: Any
    bound: Any
    source: str | None = None
    n: int | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "source": self.source,
            "status": self.status,
            "relation": ">=",
            "measured": _num(self.measured),
            "bound": _num(self.bound),
            "n": self.n,
        }


@dataclass
class VerificationReport:
    case: VerificationCase
    measured: dict
    theoretical: dict
    verdicts: list[Verdict]
    timestamp: str
    complexity: ComplexityProfile = field(repr=False, default=None)
    returns: ReturnProfile = field(repr=False, default=None)

    @property
    def degenerate(self) -> bool:
        return self.measured["degenerate"]

    @property
    def exit_code(self) -> int:
        return 1 if any(v.status == VIOLATED for v in self.verdicts) else 0

    def status_of(self, name: str, source: str | None = None) -> str:
        for v in self.verdicts:
            if v.name == name and (source is None or v.source == source):
                return v.status
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "case": self.case.to_json(),
            "measured": self.measured,
            "theoretical": self.theoretical,
            "verdicts": [v.to_json() for v in self.verdicts],
            "timestamp": self.timestamp,
        }


def _pointwise(cp: ComplexityProfile, rp: ReturnProfile) -> list[Verdict]:
    r = rp.r
    defined = rp.defined_up_to
    out = []
    if defined == 0:
        return out
    # p(n) - (r(n) - n) >= 0
    slack = [(cp.p[n - 1] - (r[n - 1] - n), n) for n in range(1, defined + 1)]
    s, n = min(slack)
    out.append(Verdict("p_ge_r_minus_n", POINTWISE, CONSISTENT if s >= 0 else VIOLATED,
                       cp.p[n - 1], r[n - 1] - n, n=n))
    # r(n) - n >= 1
    gap = [(r[n - 1] - n, n) for n in range(1, defined + 1)]
    g, n = min(gap)
    out.append(Verdict("r_ge_n_plus_1", POINTWISE, CONSISTENT if g >= 1 else VIOLATED,
                       r[n - 1], n + 1, n=n))
    if defined >= 2:
        inc = [(r[n] - r[n - 1], n) for n in range(1, defined)]
        d, n = min(inc)
        out.append(Verdict("r_strictly_increasing", POINTWISE, CONSISTENT if d >= 1 else VIOLATED,
                           r[n], r[n - 1] + 1, n=n))
    return out


def _asymptotic(name: str, measured, bound, vacuous: bool, source: str | None) -> Verdict:
    if vacuous:
        status = VACUOUS
    elif measured >= bound:
        status = CONSISTENT
    else:
        status = INCONCLUSIVE
    return Verdict(name, ASYMPTOTIC, status, measured, bound, source=source)


def _table_json(t: diophantine.BoundTable) -> dict:
    out = {
        "mu": _num(t.mu),
        "F_liminf": _num(t.F_liminf),
        "F_limsup": _num(t.F_limsup),
        "G_rep": _num(t.G_rep),
        "vacuous": dict(sorted(t.vacuous.items())),
    }
    if t.rho is not None:
        out.update(rho=_num(t.rho), h_Rep=_num(t.h_Rep), P_low=_num(t.P_low))
    return out


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()


def run_case(
    case: VerificationCase,
    config: RunConfig | None = None,
    *,
    digits: CertifiedDigits | None = None,
    timestamp: str | None = None,
) -> VerificationReport:
    """Run the full pipeline for one case.

    ``digits`` overrides generation (used to inject degenerate inputs).
    """
    config = config or RunConfig()
    try:
        if digits is None:
            digits = generate_digits(
                case.spec, case.base, case.digit_count,
                max_precision=config.precision_cap, cache_dir=config.cache_dir,
            )
        cp, rp = analysis.profiles(digits.digits, case.n_max)
    except (analysis.AnalysisError, ExpansionError) as exc:
        raise type(exc)(f"[{case.label}] {exc}") from exc

    n_lo, n_hi = case.effective_window
    r_hi = min(n_hi, rp.defined_up_to)
    notes: list[str] = []
    if r_hi < n_hi:
        notes.append(f"r(n) only witnessed up to n={rp.defined_up_to}; r window clipped to [{n_lo}, {r_hi}]")
    est = analysis.exponent_estimate(rp, n_lo, r_hi) if r_hi >= n_lo else None
    p_min, p_max = analysis.complexity_ratio_extremes(cp, n_lo, n_hi)
    defined = rp.defined()
    excess = max((r - 2 * n for n, r in enumerate(defined, start=1)), default=None)
    jumps = analysis.jump_indices(rp)

    cf_info: dict[str, Any] = {"status": "ok", "reason": None, "terms": 0, "mu_hat": None,
                               "q_min": diophantine.DEFAULT_Q_MIN, "argmax_k": None}
    mu_hat = None
    try:
        cf = diophantine.continued_fraction(digits)
        cf_info["terms"] = len(cf)
        mu = diophantine.mu_estimate(cf)
        mu_hat = mu.mu_hat
        cf_info.update(mu_hat=_num(mu_hat), argmax_k=mu.argmax)
    except diophantine.RationalSuspected as exc:
        cf_info.update(status="degenerate", reason=f"RationalSuspected: {exc}")
    except diophantine.TooFewTerms as exc:
        cf_info.update(status="degenerate", reason=f"TooFewTerms: {exc}")

    if excess is not None and excess <= 1:
        notes.append("r(n) <= 2n+1 for every witnessed n (Sturmian-type return profile)")
    rep_hat = est.rep_hat if est else None
    if rep_hat is not None and rep_hat < 2:
        implied = diophantine.mu_lower_from_rep(rep_hat)
        notes.append(
            f"rep_hat = {fmt_decimal(rep_hat)} < 2 suggests mu >= {fmt_decimal(implied)}; "
            "bounds evaluated at mu close to 2 do not describe this number"
        )

    measured = {
        "prefix_length": len(digits.digits),
        "certificate": {"method": digits.certificate, "precision_bits": digits.precision},
        "integer_part": digits.integer_part,
        "p": {
            "window": [n_lo, n_hi],
            "min_ratio": _num(p_min),
            "max_ratio": _num(p_max),
        },
        "r": {
            "window": [n_lo, r_hi],
            "defined_up_to": rp.defined_up_to,
            "jump_count": len(jumps),
            "max_r_minus_2n": excess,
        },
        "rep_hat": _num(rep_hat),
        "Rep_hat": _num(est.Rep_hat if est else None),
        "mu_hat": _num(mu_hat),
        "continued_fraction": cf_info,
        "degenerate": cf_info["status"] != "ok",
        "notes": notes,
    }

    verdicts = _pointwise(cp, rp)
    theoretical: dict[str, Any] = {"mu_hint": None, "mu_hat": None, "rep_hat": None}

    if est is not None:
        verdicts.append(_asymptotic("Rep_ge_2", est.Rep_hat, Fraction(2), False, None))
        side = diophantine.rep_side_bounds(est.rep_hat)
        mu_from_rep = diophantine.mu_lower_from_rep(est.rep_hat)
        theoretical["rep_hat"] = {
            "rho": _num(est.rep_hat),
            "h_Rep": _num(side.h_Rep),
            "P_low": _num(side.P_low),
            "mu_lower": _num(mu_from_rep),
        }
        verdicts.append(_asymptotic("Rep_ge_h_Rep", est.Rep_hat, side.h_Rep, side.below_floor, "rep_hat"))
        verdicts.append(_asymptotic("p_liminf_ge_P_low", p_min, side.P_low, side.P_low <= 1, "rep_hat"))

    sources = [("mu_hint", case.mu_hint), ("mu_hat", mu_hat)]
    for source, mu in sources:
        if mu is None:
            continue
        if mu < 2:
            notes.append(f"{source} = {fmt_decimal(mu)} < 2; bound table not evaluated")
            continue
        table = diophantine.bound_table(mu, rho=rep_hat)
        theoretical[source] = _table_json(table)
        vac = table.vacuous
        verdicts.append(_asymptotic("p_liminf_ge_F_liminf", p_min, table.F_liminf, vac["F_liminf"], source))
        verdicts.append(_asymptotic("p_limsup_ge_F_limsup", p_max, table.F_limsup, vac["F_limsup"], source))
        if est is not None:
            verdicts.append(_asymptotic("Rep_ge_G_rep", est.Rep_hat, table.G_rep, vac["G_rep"], source))
            bound = diophantine.mu_lower_from_rep(est.rep_hat)
            verdicts.append(_asymptotic("mu_ge_rep_over_rep_minus_1", mu, bound, bound == diophantine.INFINITE, source))

    return VerificationReport(case, measured, theoretical, verdicts, timestamp or _now(), cp, rp)


def report_json(report: VerificationReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def emit_report(report: VerificationReport, path: str | Path, format: str = "json") -> Path:
    path = Path(path)
    if format == "json":
        atomic_write_text(path, report_json(report))
    elif format == "csv":
        atomic_write_text(path, analysis.profile_csv(report.complexity, report.returns))
    else:
        raise ValueError(f"unknown report format {format!r}")
    return path


def _slug(i: int, case: VerificationCase) -> str:
    safe = "".join(c if c.isalnum() else "_" for c in case.spec.canonical).strip("_")
    return f"{i:03d}_{safe}_b{case.base}"


def run_batch(config: RunConfig) -> list[VerificationReport]:
    """Run every case; cases run in parallel, each case's pipeline is sequential."""
    with ThreadPoolExecutor(max_workers=max(1, config.workers)) as pool:
        reports = list(pool.map(lambda c: run_case(c, config), config.cases))
    if config.output_dir is not None:
        for i, (case, rep) in enumerate(zip(config.cases, reports)):
            stem = config.output_dir / _slug(i, case)
            emit_report(rep, stem.with_suffix(".json"), "json")
            emit_report(rep, stem.with_suffix(".csv"), "csv")
    return reports


_NUM_SCHEMA = {
    "type": ["object", "null"],
    "required": ["exact", "decimal"],
    "properties": {"exact": {"type": "string"}, "decimal": {"type": "string"}},
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["case", "measured", "theoretical", "verdicts", "timestamp"],
    "additionalProperties": False,
    "properties": {
        "case": {
            "type": "object",
            "required": ["spec", "base", "digit_count", "n_max", "window", "mu_hint"],
            "properties": {
                "spec": {"type": "string"},
                "base": {"type": "integer", "minimum": 2, "maximum": 36},
                "digit_count": {"type": "integer", "minimum": 1},
                "n_max": {"type": "integer", "minimum": 1},
                "window": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                "mu_hint": _NUM_SCHEMA,
            },
        },
        "measured": {
            "type": "object",
            "required": ["prefix_length", "p", "r", "rep_hat", "Rep_hat", "mu_hat",
                         "continued_fraction", "degenerate", "notes"],
            "properties": {
                "rep_hat": _NUM_SCHEMA,
                "Rep_hat": _NUM_SCHEMA,
                "mu_hat": _NUM_SCHEMA,
                "degenerate": {"type": "boolean"},
                "notes": {"type": "array", "items": {"type": "string"}},
                "continued_fraction": {
                    "type": "object",
                    "required": ["status", "terms"],
                    "properties": {"status": {"enum": ["ok", "degenerate"]}},
                },
            },
        },
        "theoretical": {
            "type": "object",
            "required": ["mu_hint", "mu_hat", "rep_hat"],
        },
        "verdicts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "kind", "source", "status", "relation", "measured", "bound"],
                "properties": {
                    "kind": {"enum": [POINTWISE, ASYMPTOTIC]},
                    "status": {"enum": [CONSISTENT, VIOLATED, VACUOUS, INCONCLUSIVE]},
                    "measured": _NUM_SCHEMA,
                    "bound": _NUM_SCHEMA,
                },
            },
        },
        "timestamp": {"type": "string"},
    },
}
