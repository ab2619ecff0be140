"""Assemble analysis reports.  Exact values are authoritative; every
rational is rendered as ``{"exact": "p/q", "decimal": "0.123457"}`` and the
decimal is for reading only."""
from __future__ import annotations

import json
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import Any

from .arrangement import Arrangement, invariants, validate, verify_count_identity
from .errors import SeshconfError
from .exact import Ordering
from .lattice import DivisorClass
from .seshadri import (
    Certificate,
    ResultKind,
    SeshadriResult,
    certify_main_theorem,
    certify_star_corollary,
    configurational_epsilon,
    equal_class_bounds,
    lower_bound_kodaira,
    lower_bound_ruled,
    min_curve_ratio,
    sqrt_upper_bound,
    verify_hirzebruch_type_inequality,
    verify_kodaira_inequality,
)

__all__ = ["decimal6", "rational", "analyze", "render_text", "render_json"]


def decimal6(q: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return str(d.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def rational(q) -> dict[str, str]:
    q = Fraction(q)
    return {"exact": str(q), "decimal": decimal6(q)}


def _certificate(cert: Certificate) -> dict[str, Any]:
    return {
        "theorem": cert.theorem,
        "all_passed": cert.all_passed,
        "checks": [
            {"hypothesis": c.hypothesis, "passed": c.passed, "witness": c.witness}
            for c in cert.checks
        ],
    }


def _result(res: SeshadriResult) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": res.kind.value}
    if res.kind is ResultKind.BOUNDS:
        out["lower"] = rational(res.lower)
        out["upper"] = rational(res.upper)
    else:
        out["value"] = rational(res.value)
    out["certificate"] = _certificate(res.certificate)
    return out


def _guarded(fn, *args):
    try:
        return fn(*args), None
    except (SeshconfError, ZeroDivisionError) as exc:
        return None, str(exc)


def analyze(arr: Arrangement, L: DivisorClass, *, source: str = "", digest: str = "") -> dict[str, Any]:
    warnings: list[str] = []
    report: dict[str, Any] = {
        "command": "analyze",
        "input": source,
        "digest": digest,
        "arrangement": arr.name,
        "surface": arr.surface.describe(),
        "line_bundle": str(L),
    }
    diags = validate(arr, "lattice")
    report["diagnostics"] = [str(d) for d in diags]
    s = invariants(arr)
    report["invariants"] = {
        "d": s.d,
        "t": {str(k): n for k, n in s.t.items()},
        "f0": s.f0,
        "f1": s.f1,
        "bs": s.bs,
        "b_min": min(s.b.values(), default=0),
    }
    ident, err = _guarded(verify_count_identity, arr)
    report["count_identity"] = (
        {"holds": ident.holds, "lhs": str(ident.lhs), "rhs": str(ident.rhs)}
        if ident
        else {"error": err}
    )
    eps, err = _guarded(configurational_epsilon, arr, L)
    report["configurational_epsilon"] = rational(eps) if eps is not None else {"error": err}
    mr, err = _guarded(min_curve_ratio, arr, L)
    report["min_curve_ratio"] = (
        {"value": rational(mr.value), "argmin": mr.argmin} if mr else {"error": err}
    )

    results = []
    for fn in (certify_main_theorem, certify_star_corollary, equal_class_bounds):
        res, err = _guarded(fn, arr, L)
        if res is None:
            results.append({"error": err})
            continue
        results.append(_result(res))
        for c in res.certificate.failed():
            if "undecidable" in c.witness:
                warnings.append(f"{res.certificate.theorem}: {c.hypothesis}: {c.witness}")
    report["seshadri"] = results

    exact = [
        r["value"]["exact"] for r in results if r.get("kind") == ResultKind.EXACT.value
    ]
    if s.f0:
        bound = sqrt_upper_bound(L, s.f0)
        entry: dict[str, Any] = {
            "l_squared": str(bound.l_squared),
            "r": bound.r,
            "bound": str(bound),
        }
        if mr:
            entry["min_curve_ratio_vs_bound"] = bound.compare(mr.value).name.lower()
        entry["certified_values_consistent"] = all(
            bound.compare(Fraction(v)) is not Ordering.GREATER for v in exact
        )
        report["sqrt_bound"] = entry

    lower: dict[str, Any] = {}
    lb, err = _guarded(lower_bound_ruled, arr, L)
    lower["ruled"] = rational(lb) if lb is not None else {"not_applicable": err}
    lb, err = _guarded(lower_bound_kodaira, arr, L)
    lower["kodaira"] = rational(lb) if lb is not None else {"not_applicable": err}
    report["configurational_lower_bounds"] = lower

    ineq: dict[str, Any] = {}
    rep, err = _guarded(verify_hirzebruch_type_inequality, arr)
    ineq["ruled"] = (
        {"holds": rep.holds, "lhs": str(rep.lhs), "rhs": str(rep.rhs)} if rep else {"not_applicable": err}
    )
    rep, err = _guarded(verify_kodaira_inequality, arr)
    ineq["kodaira"] = (
        {"holds": rep.holds, "lhs": str(rep.lhs), "rhs": str(rep.rhs)} if rep else {"not_applicable": err}
    )
    report["inequalities"] = ineq
    report["warnings"] = warnings
    report["note"] = (
        "exact values are authoritative, decimals are advisory; whether the Seshadri constant "
        "always equals the minimal curve ratio is an open question and is not decided here"
    )
    return report


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + "\n"


def _fmt(v) -> str:
    if isinstance(v, dict) and set(v) == {"exact", "decimal"}:
        return f"{v['exact']} (~{v['decimal']})"
    return str(v)


def render_text(report: dict[str, Any]) -> str:
    lines = []

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and not (
                    isinstance(v, dict) and set(v) == {"exact", "decimal"}
                ):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_fmt(v)}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(item, indent + 1)
                else:
                    lines.append(f"{pad}- {_fmt(item)}")
        else:
            lines.append(f"{pad}{_fmt(obj)}")

    walk(report, 0)
    return "\n".join(lines) + "\n"

