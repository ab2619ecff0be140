"""Golden-value suite behind ``seshconf verify-paper``.

Every check compares exact rationals (or exact integers) and records the
expected and actual values; a criterion passes when all of its checks do.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, invariants, verify_count_identity
from .document import dumps, loads
from .errors import HypothesisError
from .exact import Ordering, rat_cmp_sqrt
from .geometry import (
    build_fermat_plane,
    build_fermat_quartic_lines,
    build_star_lines,
    hyperplane_grouping_fermat_quartic,
    hesse_conics,
    klein,
    quasi_pencil,
    wiman,
)
from .lattice import DivisorClass, projective_plane
from .seshadri import (
    ResultKind,
    certify_main_theorem,
    certify_star_corollary,
    configurational_epsilon,
    equal_class_bounds,
    lower_bound_kodaira,
    lower_bound_ruled,
    min_curve_ratio,
    verify_hirzebruch_type_inequality,
    verify_kodaira_inequality,
)
from .transforms import double_cover_k3, pullback_to_ruled

__all__ = ["GoldenCheck", "CRITERIA", "run_golden", "criterion_status"]

CRITERIA = {
    1: "Fermat quartic lines over Q(zeta_8)",
    2: "Fermat plane arrangements",
    3: "count identity on presets",
    4: "pulled-back star: failing nef test",
    5: "pulled-back Fermat/Klein/Wiman/quasi-pencil values",
    6: "Hesse conics bounds",
    7: "star lines in P2 certified exactly",
    8: "double-cover Fermat bounds on a K3",
    9: "property suites",
}


@dataclass(frozen=True)
class GoldenCheck:
    criterion: int
    name: str
    expected: str
    actual: str
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.criterion}. {self.name}: {self.actual}"
        if not self.passed:
            out += f" (expected {self.expected})"
        return out


def _show(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(_show(x) for x in v) + ")"
    if isinstance(v, (Ordering, ResultKind)):
        return v.name.lower()
    return str(v)


class _Suite:
    def __init__(self):
        self.checks: list[GoldenCheck] = []
        self.pool: list[tuple[Arrangement, DivisorClass | None]] = []

    def eq(self, crit: int, name: str, expected, actual):
        self.checks.append(GoldenCheck(crit, name, _show(expected), _show(actual), expected == actual))

    def true(self, crit: int, name: str, ok: bool, detail: str = ""):
        self.checks.append(GoldenCheck(crit, name, "true", detail or str(bool(ok)), bool(ok)))

    def keep(self, arr: Arrangement, L: DivisorClass | None = None) -> Arrangement:
        self.pool.append((arr, L))
        return arr

    def guard(self, crit: int, name: str, fn):
        try:
            fn()
        except Exception as exc:  # a crash is a failed check, not an aborted run
            self.checks.append(
                GoldenCheck(crit, name, "no error", f"{type(exc).__name__}: {exc}", False)
            )


def _identity(s: _Suite, crit: int, arr: Arrangement, label: str):
    rep = verify_count_identity(arr)
    s.true(crit, f"{label}: count identity", rep.holds, f"{rep.lhs} = {rep.rhs}")


def _crit1(s: _Suite):
    arr = s.keep(build_fermat_quartic_lines())
    H = arr.surface.basis("H")
    s.pool[-1] = (arr, H)
    inv = invariants(arr)
    s.eq(1, "lines", 48, arr.d)
    s.eq(1, "singular points", 216, inv.f0)
    s.eq(1, "t2", 192, inv.tk(2))
    s.eq(1, "t4", 24, inv.tk(4))
    s.eq(1, "points per line", {10}, set(inv.b.values()))
    quad = {c: 0 for c in arr.curve_ids}
    for p in arr.points:
        if p.multiplicity == 4:
            for c in p.incident:
                quad[c] += 1
    s.eq(1, "quadruple points per line", {2}, set(quad.values()))
    s.eq(1, "min curve ratio for O(1)", Fraction(1, 10), min_curve_ratio(arr, H).value)
    groups = hyperplane_grouping_fermat_quartic(arr)
    s.eq(1, "hyperplane groups", 24, len(groups))
    s.eq(1, "group sizes", {4}, {len(g) for _, g in groups})
    member = {c: 0 for c in arr.curve_ids}
    for _, g in groups:
        for c in g:
            member[c] += 1
    s.eq(1, "groups per line", {2}, set(member.values()))
    s.eq(1, "rat_cmp_sqrt(1/10, 4/216)", Ordering.LESS, rat_cmp_sqrt(Fraction(1, 10), Fraction(4, 216)))
    res = certify_main_theorem(arr, H)
    s.eq(1, "main theorem verdict", ResultKind.CANDIDATE, res.kind)


def _crit2(s: _Suite):
    for n in (3, 4, 5, 6):
        arr = s.keep(build_fermat_plane(n), projective_plane().basis("H"))
        inv = invariants(arr)
        expected = {3: 12} if n == 3 else {3: n * n, n: 3}
        s.eq(2, f"n={n}: profile", expected, dict(inv.t))
        s.eq(2, f"n={n}: points per line", {n + 1}, set(inv.b.values()))
        _identity(s, 2, arr, f"n={n}")


def _crit3(s: _Suite):
    H = projective_plane().basis("H")
    for label, arr, lhs in (("Klein", klein(), 210), ("Wiman", wiman(), 990)):
        s.keep(arr, H)
        rep = verify_count_identity(arr)
        s.eq(3, f"{label}: sum of pairings", lhs, rep.lhs)
        s.true(3, f"{label}: count identity", rep.holds, f"{rep.lhs} = {rep.rhs}")
    s.eq(3, "Klein profile", {3: 28, 4: 21}, dict(invariants(klein()).t))
    s.eq(3, "Wiman profile", {3: 120, 4: 45, 5: 36}, dict(invariants(wiman()).t))
    for k in range(4, 9):
        _identity(s, 3, s.keep(quasi_pencil(k), H), f"quasi-pencil({k})")


def _crit4(s: _Suite):
    arr = s.keep(pullback_to_ruled(build_star_lines(5, seed=0), 2))
    L = arr.surface.divisor(1, 3)
    s.pool[-1] = (arr, L)
    res = certify_star_corollary(arr, L)
    check = res.certificate.check("nef test divisor")
    s.eq(4, "nef check passes", False, check.passed)
    witness = check.divisor.coeffs if check.divisor is not None else None
    s.eq(4, "witness divisor (C0, f)", (Fraction(-1, 6), Fraction(1, 2)), witness)
    s.eq(4, "min curve ratio", Fraction(3, 8), min_curve_ratio(arr, L).value)
    s.eq(4, "configurational epsilon", Fraction(3, 8), configurational_epsilon(arr, L))


def _crit5(s: _Suite):
    for n, e in ((3, 4), (3, 5), (4, 5)):
        arr = s.keep(pullback_to_ruled(build_fermat_plane(n), e))
        L = arr.surface.divisor(1, e + 1)
        s.pool[-1] = (arr, L)
        s.eq(5, f"Fermat n={n} on X_{e}: eps_C", Fraction(e + 1, e * (n + 1)), configurational_epsilon(arr, L))
    for label, base, denom in (("Klein", klein(), 8), ("Wiman", wiman(), 16)):
        for e in (4, 5):
            arr = s.keep(pullback_to_ruled(base, e))
            L = arr.surface.divisor(1, e + 1)
            s.pool[-1] = (arr, L)
            s.eq(5, f"{label} on X_{e}: eps_C", Fraction(e + 1, denom * e), configurational_epsilon(arr, L))
    for k in (5, 6):
        e = k + 1
        arr = s.keep(pullback_to_ruled(quasi_pencil(k), e))
        L = arr.surface.divisor(1, e + 1)
        s.pool[-1] = (arr, L)
        s.eq(5, f"quasi-pencil({k}) on X_{e}: eps_C", Fraction(k * (k + 2), 3 * (k * k - 1)), configurational_epsilon(arr, L))
        s.eq(5, f"quasi-pencil({k}) on X_{e}: min ratio", Fraction(k + 2, k * k - 1), min_curve_ratio(arr, L).value)


def _crit6(s: _Suite):
    arr = hesse_conics()
    H = arr.surface.basis("H")
    s.keep(arr, H)
    main = certify_main_theorem(arr, H)
    nef = [c for c in main.certificate.checks if c.hypothesis.startswith("nef:")]
    s.true(6, "main theorem nef checks fail", bool(nef) and not any(c.passed for c in nef),
           f"{sum(not c.passed for c in nef)}/{len(nef)} fail")
    res = equal_class_bounds(arr, H)
    s.eq(6, "bounds", (Fraction(1, 22), Fraction(1, 4)), (res.lower, res.upper))
    s.eq(6, "base constant", 8, invariants(arr).bs)


def _crit7(s: _Suite):
    H = projective_plane().basis("H")
    for d in (5, 6, 10):
        arr = s.keep(build_star_lines(d, seed=d), H)
        res = certify_star_corollary(arr, H)
        s.eq(7, f"d={d}: kind", ResultKind.EXACT, res.kind)
        s.eq(7, f"d={d}: value", Fraction(1, d - 1), res.value)
        s.true(7, f"d={d}: all hypotheses pass", res.certificate.all_passed,
               ", ".join(c.hypothesis for c in res.certificate.checks))


def _crit8(s: _Suite):
    for n in (3, 4):
        arr = s.keep(double_cover_k3(build_fermat_plane(n)))
        L = arr.surface.basis("L")
        s.pool[-1] = (arr, L)
        res = equal_class_bounds(arr, L)
        s.eq(8, f"n={n}: bounds", (Fraction(1, 3 * n - 1), Fraction(1, n + 1)), (res.lower, res.upper))
        rep = verify_kodaira_inequality(arr)
        s.true(8, f"n={n}: Kodaira-type inequality", rep.holds, f"{rep.lhs} <= {rep.rhs}")
        if n == 3:
            lb = lower_bound_kodaira(arr, L)
            s.eq(8, "n=3: Kodaira lower bound", Fraction(18, 396), lb)
            eps = configurational_epsilon(arr, L)
            s.true(8, "n=3: lower bound <= eps_C", lb <= eps, f"{lb} <= {eps}")


def _crit9(s: _Suite):
    H = projective_plane().basis("H")
    failures = []
    for k in range(200):
        d = 4 + k % 9
        arr = build_star_lines(d, seed=1000 + k)
        rep = verify_count_identity(arr)
        if not rep.holds or invariants(arr).tk(2) != d * (d - 1) // 2:
            failures.append(f"seed {1000 + k}")
    s.true(9, "count identity on 200 random stars", not failures, ", ".join(failures) or "200/200")

    bad_f1 = [a.name for a, _ in s.pool if invariants(a).f1 != sum(invariants(a).b.values())]
    s.true(9, "f1 = sum b_i", not bad_f1, ", ".join(bad_f1) or f"{len(s.pool)} arrangements")

    bad_h = []
    for arr, L in s.pool:
        if L is None:
            continue
        base = min_curve_ratio(arr, L)
        eps = configurational_epsilon(arr, L)
        for m in (2, 3, Fraction(1, 2)):
            scaled = min_curve_ratio(arr, m * L)
            if scaled.value != m * base.value or scaled.argmin != base.argmin:
                bad_h.append(f"{arr.name} (m={m})")
            if configurational_epsilon(arr, m * L) != m * eps:
                bad_h.append(f"{arr.name} eps (m={m})")
    s.true(9, "homogeneity under L -> mL", not bad_h, ", ".join(bad_h) or "all ratios scale")

    evaluated, bad_r = 0, []
    for arr, L in s.pool:
        if arr.surface.e is None or arr.surface.e < 4 or L is None:
            continue
        try:
            ineq = verify_hirzebruch_type_inequality(arr)
            lb = lower_bound_ruled(arr, L)
        except HypothesisError:
            continue
        evaluated += 1
        if not ineq.holds or lb > configurational_epsilon(arr, L):
            bad_r.append(arr.name)
    s.true(9, "ruled inequality and lower bound on pullbacks",
           evaluated > 0 and not bad_r, ", ".join(bad_r) or f"{evaluated} instances")

    bad_rt = []
    for arr, _ in s.pool:
        back = loads(dumps(arr))
        if back != arr or invariants(back) != invariants(arr) or back.shared_point_counts() != arr.shared_point_counts():
            bad_rt.append(arr.name)
    s.true(9, "serialization round-trip", not bad_rt, ", ".join(bad_rt) or f"{len(s.pool)} arrangements")


_STEPS = (_crit1, _crit2, _crit3, _crit4, _crit5, _crit6, _crit7, _crit8, _crit9)


def run_golden(criteria=None) -> tuple[list[GoldenCheck], float]:
    """Run the suite (or the selected criteria; 9 reuses what the others built)."""
    s = _Suite()
    start = time.perf_counter()
    for k, step in enumerate(_STEPS, start=1):
        if criteria is None or k in criteria:
            s.guard(k, "runs", lambda step=step: step(s))
    return s.checks, time.perf_counter() - start


def criterion_status(checks: list[GoldenCheck]) -> dict[int, bool]:
    out: dict[int, bool] = {}
    for c in checks:
        out[c.criterion] = out.get(c.criterion, True) and c.passed
    return dict(sorted(out.items()))
