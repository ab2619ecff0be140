"""Seshadri constants at the singular points of a transversal arrangement.

Nothing here searches over curves.  Values come out of theorem
applications whose hypotheses are checked one by one and recorded in a
:class:`Certificate`; a value is reported as exact only when every check
passed, otherwise it is a *candidate* (the ratio realised by the
arrangement's own curves, which is always an upper bound).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .arrangement import (
    Arrangement,
    has_free_quadruple,
    invariants,
    is_connected,
    is_star,
    natural_key,
    not_all_concurrent,
    satisfies_equal_class_assumption,
    validate,
)
from .errors import HypothesisError, MissingData, UnsupportedSurface, VacuousBound
from .exact import Ordering, as_rational, rat_cmp_sqrt
from .lattice import (
    DivisorClass,
    SurfaceKind,
    is_ample,
    is_nef,
    nef_violation,
    pair,
)

__all__ = [
    "ResultKind",
    "Check",
    "Certificate",
    "SeshadriResult",
    "MinRatio",
    "SqrtBound",
    "InequalityReport",
    "configurational_epsilon",
    "min_curve_ratio",
    "certify_main_theorem",
    "certify_star_corollary",
    "equal_class_bounds",
    "sqrt_upper_bound",
    "verify_hirzebruch_type_inequality",
    "lower_bound_ruled",
    "lower_bound_kodaira",
    "verify_kodaira_inequality",
    "bounds_cor_main",
    "verify_htin",
]

MAIN_THEOREM = "transversal arrangement nefness theorem"
STAR_COROLLARY = "star configuration corollary"
EQUAL_CLASS_BOUNDS = "equal-class two-sided bound"
HIRZEBRUCH_RULED = "Hirzebruch-type inequality on ruled surfaces"
KODAIRA_INEQUALITY = "Hirzebruch-type inequality for non-negative Kodaira dimension"


class ResultKind(enum.Enum):
    EXACT = "exact"
    BOUNDS = "bounds"
    CANDIDATE = "candidate"


@dataclass(frozen=True)
class Check:
    hypothesis: str
    passed: bool
    witness: str = ""
    divisor: DivisorClass | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Certificate:
    theorem: str
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, hypothesis: str) -> Check:
        for c in self.checks:
            if c.hypothesis == hypothesis:
                return c
        raise KeyError(hypothesis)


@dataclass(frozen=True)
class SeshadriResult:
    kind: ResultKind
    certificate: Certificate
    value: Fraction | None = None
    lower: Fraction | None = None
    upper: Fraction | None = None

    def __post_init__(self):
        if self.kind is ResultKind.EXACT and not self.certificate.all_passed:
            raise ValueError("an exact result needs every hypothesis check to pass")
        if self.kind is ResultKind.BOUNDS:
            if self.lower is None or self.upper is None or self.lower > self.upper:
                raise ValueError("bounds must satisfy lower <= upper")
        elif self.value is None:
            raise ValueError("exact and candidate results carry a value")


@dataclass(frozen=True)
class MinRatio:
    value: Fraction
    argmin: str


@dataclass(frozen=True)
class InequalityReport:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    checks: tuple[Check, ...] = ()


# --- basic quantities ---

def _degrees(arr: Arrangement, L: DivisorClass) -> list[Fraction]:
    S = arr.surface
    return [pair(S, L, C) for C in arr.classes()]


def configurational_epsilon(arr: Arrangement, L: DivisorClass) -> Fraction:
    """``sum_i L.C_i`` divided by ``f_1 = sum_p r_p``."""
    total = sum(_degrees(arr, L), Fraction(0))
    f1 = invariants(arr).f1
    if f1 == 0:
        raise HypothesisError("the arrangement has no singular points")
    return total / f1


def min_curve_ratio(arr: Arrangement, L: DivisorClass) -> MinRatio:
    """Smallest ``L.C_i / b_i``; ties go to the lowest curve id (natural order)."""
    summary = invariants(arr)
    best = None
    for c, deg in zip(arr.curves, _degrees(arr, L)):
        b = summary.b[c.id]
        if b == 0:
            continue
        key = (deg / b, natural_key(c.id))
        if best is None or key < best[0]:
            best = (key, c.id)
    if best is None:
        raise HypothesisError("no curve passes through a singular point")
    return MinRatio(best[0][0], best[1])


@dataclass(frozen=True)
class SqrtBound:
    """The bound ``sqrt(L^2 / r)`` kept as the exact pair ``(L^2, r)``."""

    l_squared: Fraction
    r: int

    @property
    def radicand(self) -> Fraction:
        return self.l_squared / self.r

    def compare(self, value) -> Ordering:
        return rat_cmp_sqrt(as_rational(value), self.radicand)

    def admits(self, value) -> bool:
        return self.compare(value) is not Ordering.GREATER

    def exact_value(self) -> Fraction | None:
        q = self.radicand
        if q < 0:
            return None
        p, s = isqrt(q.numerator), isqrt(q.denominator)
        if p * p == q.numerator and s * s == q.denominator:
            return Fraction(p, s)
        return None

    def __str__(self):
        v = self.exact_value()
        return str(v) if v is not None else f"sqrt({self.radicand})"


def sqrt_upper_bound(L: DivisorClass, r: int) -> SqrtBound:
    if r < 1:
        raise ValueError("the number of points must be positive")
    return SqrtBound(pair(L.surface, L, L), int(r))


# --- hypothesis checks ---

def _nef_check(arr: Arrangement, D: DivisorClass, label: str) -> Check:
    S = arr.surface
    try:
        if is_nef(S, D):
            return Check(label, True, f"{D} is nef", D)
        return Check(label, False, nef_violation(S, D), D)
    except UnsupportedSurface:
        pass
    # the arrangement's curves are irreducible, so meeting one negatively refutes nefness
    for c in arr.curves:
        if c.cls is None:
            continue
        v = pair(S, D, c.cls)
        if v < 0:
            return Check(label, False, f"({D}).{c.id} = {v} < 0", D)
    return Check(label, False, "nefness undecidable on this surface", D)


def _ample_check(arr: Arrangement, L: DivisorClass) -> Check:
    try:
        ok = is_ample(arr.surface, L)
    except UnsupportedSurface:
        return Check("L ample", False, "ampleness undecidable on this surface")
    return Check("L ample", ok, f"{L} is {'ample' if ok else 'not ample'}")


def _transversality_check(arr: Arrangement) -> Check:
    diags = [d for d in validate(arr, "lattice") if d.code != "disconnected"]
    if diags:
        return Check("transversality", False, "; ".join(str(d) for d in diags[:3]))
    return Check("transversality", True, "shared points match intersection numbers for all pairs")


def _common_class(arr: Arrangement) -> DivisorClass:
    return arr.classes()[0]


def certify_main_theorem(arr: Arrangement, L: DivisorClass) -> SeshadriResult:
    """Exact value ``min_i L.C_i / b_i`` when ``d >= 4``, ``L`` is ample and
    ``(d sum b_i / ((d-1)^2 sum L.C_i)) L - C_i`` is nef for every ``i``."""
    ratio = min_curve_ratio(arr, L)
    summary = invariants(arr)
    d = arr.d
    checks = [
        Check("d >= 4", d >= 4, f"d = {d}"),
        _transversality_check(arr),
        Check("connected", is_connected(arr), ""),
        _ample_check(arr, L),
    ]
    total_deg = sum(_degrees(arr, L), Fraction(0))
    if total_deg <= 0 or d < 2:
        checks.append(Check("nef test divisors", False, f"sum L.C_i = {total_deg}"))
    else:
        coef = Fraction(d * summary.f1, (d - 1) ** 2) / total_deg
        for c in arr.curves:
            checks.append(_nef_check(arr, coef * L - c.cls, f"nef: {coef}*L - {c.id}"))
    cert = Certificate(MAIN_THEOREM, tuple(checks))
    kind = ResultKind.EXACT if cert.all_passed else ResultKind.CANDIDATE
    return SeshadriResult(kind, cert, value=ratio.value)


def _equal_class_checks(arr: Arrangement, L: DivisorClass) -> tuple[list[Check], Check | None]:
    C1 = _common_class(arr)
    S = arr.surface
    eq = satisfies_equal_class_assumption(arr)
    checks = [
        Check(
            "equal classes",
            eq,
            f"d = {arr.d}, all classes {C1}" if eq else "needs d >= 4, connected, equal classes",
        ),
        _transversality_check(arr),
        _ample_check(arr, L),
    ]
    lc, cc = pair(S, L, C1), pair(S, C1, C1)
    if lc <= 0 or cc <= 0 or arr.d < 2:
        checks.append(Check("nef test divisor", False, f"L.C1 = {lc}, C1^2 = {cc}"))
        return checks, None
    coef = Fraction(arr.d, arr.d - 1) * cc / lc
    nef = _nef_check(arr, coef * L - C1, "nef test divisor")
    checks.append(nef)
    return checks, nef


def certify_star_corollary(arr: Arrangement, L: DivisorClass) -> SeshadriResult:
    """Exact value ``L.C1 / (C1^2 (d-1))`` for star configurations of
    equal-class curves when ``(d C1^2 / ((d-1) L.C1)) L - C1`` is nef."""
    checks, _ = _equal_class_checks(arr, L)
    checks.insert(0, Check("star", is_star(arr), "all singular points are double points"))
    cert = Certificate(STAR_COROLLARY, tuple(checks))
    if cert.all_passed:
        C1 = _common_class(arr)
        S = arr.surface
        value = pair(S, L, C1) / (pair(S, C1, C1) * (arr.d - 1))
        return SeshadriResult(ResultKind.EXACT, cert, value=value)
    return SeshadriResult(ResultKind.CANDIDATE, cert, value=min_curve_ratio(arr, L).value)


def equal_class_bounds(arr: Arrangement, L: DivisorClass) -> SeshadriResult:
    """``L.C1 / (C1^2 (d-1)) <= eps <= L.C1 / bs`` for equal-class arrangements
    under the same nefness condition as the star corollary."""
    checks, _ = _equal_class_checks(arr, L)
    cert = Certificate(EQUAL_CLASS_BOUNDS, tuple(checks))
    if not cert.all_passed:
        return SeshadriResult(ResultKind.CANDIDATE, cert, value=min_curve_ratio(arr, L).value)
    C1 = _common_class(arr)
    S = arr.surface
    lc = pair(S, L, C1)
    lower = lc / (pair(S, C1, C1) * (arr.d - 1))
    upper = lc / invariants(arr).bs
    return SeshadriResult(ResultKind.BOUNDS, cert, lower=lower, upper=upper)


# --- Hirzebruch-type inequalities and the resulting lower bounds ---

def _ruled_hypotheses(arr: Arrangement, a=None, b=None) -> tuple[list[Check], int, Fraction, Fraction]:
    S = arr.surface
    if S.kind is not SurfaceKind.RULED:
        raise HypothesisError(f"needs a ruled surface, got {S.describe()}")
    e, g = S.e, S.genus
    C1 = _common_class(arr)
    ca, cb = C1.coeffs
    a = ca if a is None else as_rational(a)
    b = cb if b is None else as_rational(b)
    checks = [
        Check("e >= 4", e >= 4, f"e = {e}"),
        Check("equal classes", satisfies_equal_class_assumption(arr), ""),
        Check("class is a*C0 + b*f", (ca, cb) == (a, b), f"C1 = {C1}"),
        Check("a > 0 and b >= a*e", a > 0 and b >= a * e, f"a = {a}, b = {b}, e = {e}"),
        Check("not all curves through one point", not_all_concurrent(arr), ""),
        Check(
            "a >= 2 or four curves without a common point",
            a >= 2 or has_free_quadruple(arr),
            "",
        ),
        _transversality_check(arr),
    ]
    return checks, g, a, b


def _raise_failed(checks, what: str):
    failed = [c for c in checks if not c.passed]
    if failed:
        names = ", ".join(c.hypothesis for c in failed)
        err = HypothesisError(f"{what}: hypotheses fail ({names})")
        err.checks = tuple(checks)
        raise err


def verify_hirzebruch_type_inequality(arr: Arrangement, a=None, b=None) -> InequalityReport:
    """Evaluate ``t2 + 3/4 t3 >= -16 + 16g + sum_{k>=5} (2k-9) t_k
    + d (e(5a^2 - 2a) - 10ab - 4ag + 4a + 4b)`` on a ruled surface."""
    checks, g, a, b = _ruled_hypotheses(arr, a, b)
    _raise_failed(checks, HIRZEBRUCH_RULED)
    e = arr.surface.e
    s = invariants(arr)
    d = arr.d
    lhs = s.tk(2) + Fraction(3, 4) * s.tk(3)
    rhs = (
        -16
        + 16 * g
        + sum((2 * k - 9) * n for k, n in s.t.items() if k >= 5)
        + d * (e * (5 * a * a - 2 * a) - 10 * a * b - 4 * a * g + 4 * a + 4 * b)
    )
    return InequalityReport(lhs >= rhs, Fraction(lhs), Fraction(rhs), tuple(checks))


def lower_bound_ruled(arr: Arrangement, L: DivisorClass) -> Fraction:
    """Lower bound for the configurational constant on a ruled surface with
    ``e >= 4``:

    ``d L.C1 / (8 - 8g + 9 (2ab - a^2 e) d^2 / 4 + d (2ae - a^2 e / 2 + ab + 4ag - 4a - 4b) / 2)``
    """
    checks, g, a, b = _ruled_hypotheses(arr)
    checks.append(_ample_check(arr, L))
    _raise_failed(checks, HIRZEBRUCH_RULED)
    e = arr.surface.e
    d = arr.d
    self_int = 2 * a * b - a * a * e
    f0 = invariants(arr).f0
    if not d <= f0 <= self_int * comb(d, 2):
        raise HypothesisError(f"f0 = {f0} violates d <= f0 <= C1^2 * C(d,2)")
    denom = (
        8
        - 8 * g
        + Fraction(9, 4) * self_int * d * d
        + Fraction(d, 2) * (2 * a * e - a * a * e / 2 + a * b + 4 * a * g - 4 * a - 4 * b)
    )
    if denom <= 0:
        raise VacuousBound(f"bound vacuous: denominator {denom} <= 0")
    return d * pair(arr.surface, L, _common_class(arr)) / denom


def _kodaira_data(arr: Arrangement):
    S = arr.surface
    if S.kodaira_dimension is None:
        raise MissingData(f"Kodaira dimension of {S.describe()} is not recorded")
    if S.kodaira_dimension < 0:
        raise HypothesisError(f"{S.describe()} has negative Kodaira dimension")
    if S.chern_c2 is None or S.canonical_square is None or S.canonical is None:
        raise MissingData(f"c2, K^2 and K are required on {S.describe()}")
    missing = [c.id for c in arr.curves if c.genus is None]
    if missing:
        raise MissingData(f"curve genera missing: {', '.join(missing[:5])}")
    K = S.canonical_class
    KC = sum((pair(S, K, C) for C in arr.classes()), Fraction(0))
    genus_term = 4 * sum((1 - c.genus for c in arr.curves), Fraction(0))
    return S.chern_c2, S.canonical_square, KC, genus_term


def verify_kodaira_inequality(arr: Arrangement) -> InequalityReport:
    """``K.C + 4 sum (1 - g(C_i)) - t2 + sum_{r>=3} (r-4) t_r <= 3 c2 - K^2``."""
    c2, K2, KC, genus_term = _kodaira_data(arr)
    s = invariants(arr)
    lhs = KC + genus_term - s.tk(2) + sum((k - 4) * n for k, n in s.t.items() if k >= 3)
    rhs = 3 * c2 - K2
    checks = (Check("d >= 2", arr.d >= 2, f"d = {arr.d}"), _transversality_check(arr))
    return InequalityReport(lhs <= rhs and all(c.passed for c in checks), lhs, rhs, checks)


def lower_bound_kodaira(arr: Arrangement, L: DivisorClass) -> Fraction:
    """Lower bound for the configurational constant on a surface of
    non-negative Kodaira dimension:

    ``d L.C1 / (3 c2 - K^2 + 4 C1^2 C(d,2) - K.C - 4 sum (1 - g(C_i)))``
    """
    c2, K2, KC, genus_term = _kodaira_data(arr)
    checks = [
        Check("equal classes", satisfies_equal_class_assumption(arr), ""),
        Check("not all curves through one point", not_all_concurrent(arr), ""),
        _transversality_check(arr),
        _ample_check(arr, L),
    ]
    _raise_failed(checks, KODAIRA_INEQUALITY)
    S = arr.surface
    C1 = _common_class(arr)
    d = arr.d
    cc = pair(S, C1, C1)
    f0 = invariants(arr).f0
    if not d <= f0 <= cc * comb(d, 2):
        raise HypothesisError(f"f0 = {f0} violates d <= f0 <= C1^2 * C(d,2)")
    denom = 3 * c2 - K2 + 4 * cc * comb(d, 2) - KC - genus_term
    if denom <= 0:
        raise VacuousBound(f"bound vacuous: denominator {denom} <= 0")
    return d * pair(S, L, C1) / denom

# short names kept for callers used to the original naming
bounds_cor_main = equal_class_bounds
verify_htin = verify_hirzebruch_type_inequality
