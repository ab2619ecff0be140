"""Command-line front end.

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as rep
from .arrangement import Arrangement, invariants
from .document import DocumentError, digest, dumps, loads, parse_line_bundle
from .errors import SeshconfError
from .geometry import build_fermat_plane, build_fermat_quartic_lines, build_star_lines, preset
from .golden import CRITERIA, criterion_status, run_golden
from .lattice import SurfaceKind
from .transforms import double_cover_k3, pullback_to_ruled

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_input(path: str | None) -> tuple[Arrangement, str, str]:
    if not path:
        raise InputError("--input is required")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return loads(text), text, path
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None
    except (ValueError, SeshconfError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _write(text: str, path: str | None):
    if not path or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


def _int_param(params: list[str], k: int, what: str) -> int:
    if len(params) <= k:
        raise InputError(f"missing parameter: {what}")
    try:
        return int(params[k])
    except ValueError:
        raise InputError(f"{what} must be an integer, got {params[k]!r}") from None


def _build(args) -> Arrangement:
    kind, params = args.kind, args.params
    try:
        if kind == "fermat-plane":
            return build_fermat_plane(_int_param(params, 0, "n"))
        if kind == "fermat-quartic":
            return build_fermat_quartic_lines()
        if kind == "star":
            return build_star_lines(_int_param(params, 0, "d"), seed=args.seed)
        if kind == "preset":
            if not params:
                raise InputError("missing parameter: preset name")
            extra = _int_param(params, 1, "parameter") if len(params) > 1 else None
            return preset(params[0], extra)
        if kind == "pullback":
            source, _, _ = _read_input(args.input)
            return pullback_to_ruled(source, _int_param(params, 0, "e"))
        if kind == "double-cover":
            source, _, _ = _read_input(args.input)
            return double_cover_k3(source)
    except (ValueError, SeshconfError) as exc:
        raise InputError(str(exc)) from None
    raise InputError(f"unknown build kind {kind!r}")


def cmd_build(args) -> int:
    arr = _build(args)
    _write(dumps(arr), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    arr, text, path = _read_input(args.input)
    S = arr.surface
    try:
        if args.line_bundle:
            L = parse_line_bundle(args.line_bundle, S)
        elif S.ample_classes:
            L = S.divisor(*S.ample_classes[0])
        elif S.kind is SurfaceKind.PROJECTIVE_PLANE:
            L = S.basis("H")
        else:
            raise InputError("--line-bundle is required: the surface declares no ample class")
    except DocumentError as exc:
        raise InputError(str(exc)) from None
    report = rep.analyze(arr, L, source=path, digest=digest(text))
    out = rep.render_json(report) if args.format == "json" else rep.render_text(report)
    _write(out, args.output)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    checks, elapsed = run_golden()
    status = criterion_status(checks)
    if args.format == "json":
        payload = {
            "command": "verify-paper",
            "criteria": [
                {"criterion": k, "title": CRITERIA[k], "passed": ok} for k, ok in status.items()
            ],
            "checks": [
                {
                    "criterion": c.criterion,
                    "name": c.name,
                    "expected": c.expected,
                    "actual": c.actual,
                    "passed": c.passed,
                }
                for c in checks
            ],
            "all_passed": all(status.values()),
        }
        out = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [c.line() for c in checks]
        lines.append("")
        for k, ok in status.items():
            lines.append(f"criterion {k} ({CRITERIA[k]}): {'PASS' if ok else 'FAIL'}")
        lines.append(f"{sum(status.values())}/{len(status)} criteria pass")
        out = "\n".join(lines) + "\n"
    _write(out, args.output)
    if args.verbose:
        print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if all(status.values()) else EXIT_CHECK


def _incidence_table(arr: Arrangement) -> str:
    inv = invariants(arr)
    lines = [f"# {arr.name or 'arrangement'} on {arr.surface.describe()}"]
    lines.append(f"# d = {arr.d}, f0 = {inv.f0}, t = {dict(inv.t)}")
    for c in arr.curves:
        pts = " ".join(p.id for p in arr.points_on(c.id))
        lines.append(f"{c.id}\t{c.cls}\t{pts}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    arr, _, _ = _read_input(args.input)
    _write(dumps(arr) if args.format == "json" else _incidence_table(arr), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seshconf",
        description="Curve arrangements on surfaces and their multi-point Seshadri constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="text"):
        p.add_argument("--input", "-i", help="arrangement document ('-' for stdin)")
        p.add_argument("--output", "-o", help="output path (default stdout)")
        p.add_argument("--format", choices=("text", "json"), default=fmt_default)

    b = sub.add_parser("build", help="write an arrangement document")
    b.add_argument(
        "kind",
        choices=("fermat-plane", "fermat-quartic", "star", "preset", "pullback", "double-cover"),
    )
    b.add_argument("params", nargs="*", help="n | d | preset name [k] | e")
    b.add_argument("--seed", type=int, default=0, help="seed for random star arrangements")
    common(b, "json")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="invariants, certificates and bounds")
    common(a)
    a.add_argument("--line-bundle", "-L", help='class such as "1/1,3/1" or "C0+3f"')
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-paper", help="run the golden-value suite")
    common(v)
    v.add_argument("--verbose", "-v", action="store_true")
    v.set_defaults(func=cmd_verify_paper)

    e = sub.add_parser("export", help="re-serialize a document or print its incidence table")
    common(e)
    e.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"seshconf: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
