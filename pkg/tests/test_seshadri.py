from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seshconf.errors import HypothesisError, MissingData, VacuousBound
from seshconf.exact import Ordering
from seshconf.geometry import build_fermat_plane, build_star_lines, hesse_conics, klein, quasi_pencil
from seshconf.lattice import projective_plane
from seshconf.seshadri import (
    Certificate,
    Check,
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
from seshconf.transforms import double_cover_k3, pullback_to_ruled

H = projective_plane().basis("H")


def test_result_invariants():
    bad = Certificate("t", (Check("x", False),))
    with pytest.raises(ValueError):
        SeshadriResult(ResultKind.EXACT, bad, value=Fraction(1))
    with pytest.raises(ValueError):
        SeshadriResult(ResultKind.BOUNDS, bad, lower=Fraction(2), upper=Fraction(1))
    with pytest.raises(ValueError):
        SeshadriResult(ResultKind.CANDIDATE, bad)


@pytest.mark.parametrize("d", [4, 5, 6, 10])
def test_star_plane_exact(d):
    arr = build_star_lines(d, seed=d)
    res = certify_star_corollary(arr, H)
    assert res.kind is ResultKind.EXACT and res.value == Fraction(1, d - 1)
    assert res.certificate.all_passed
    main = certify_main_theorem(arr, H)
    assert main.kind is ResultKind.EXACT and main.value == Fraction(1, d - 1)
    bounds = equal_class_bounds(arr, H)
    assert (bounds.lower, bounds.upper) == (Fraction(1, d - 1), Fraction(1, d - 1))


def test_klein_candidate_with_witness():
    res = certify_main_theorem(klein(), H)
    assert res.kind is ResultKind.CANDIDATE and res.value == Fraction(1, 8)
    nef = res.certificate.check("nef: 21/50*L - k1")
    assert not nef.passed and nef.divisor.coeffs == (Fraction(-29, 50),)


def test_hesse():
    arr = hesse_conics()
    main = certify_main_theorem(arr, H)
    assert main.kind is ResultKind.CANDIDATE and main.value == Fraction(1, 4)
    assert all(not c.passed for c in main.certificate.checks if c.hypothesis.startswith("nef:"))
    res = equal_class_bounds(arr, H)
    assert res.kind is ResultKind.BOUNDS
    assert (res.lower, res.upper) == (Fraction(1, 22), Fraction(1, 4))
    assert certify_star_corollary(arr, H).certificate.check("star").passed is False


def test_quartic_candidate(quartic):
    L = quartic.surface.basis("H")
    assert min_curve_ratio(quartic, L).value == Fraction(1, 10)
    res = certify_main_theorem(quartic, L)
    assert res.kind is ResultKind.CANDIDATE and res.value == Fraction(1, 10)
    failed = res.certificate.failed()
    assert failed and all(c.hypothesis.startswith("nef:") for c in failed)
    # refuted by a line of the arrangement meeting the test divisor negatively
    assert all("< 0" in c.witness for c in failed)
    bound = sqrt_upper_bound(L, 216)
    assert bound.compare(Fraction(1, 10)) is Ordering.LESS and bound.admits(Fraction(1, 10))


def test_sqrt_bound():
    b = sqrt_upper_bound(4 * H, 4)
    assert b.exact_value() == 2 and str(b) == "2"
    c = sqrt_upper_bound(H, 3)
    assert c.exact_value() is None and str(c) == "sqrt(1/3)"
    assert c.compare(Fraction(1, 2)) is Ordering.LESS
    with pytest.raises(ValueError):
        sqrt_upper_bound(H, 0)


def test_min_ratio_ties_use_natural_order():
    arr = build_star_lines(12, seed=1)
    assert min_curve_ratio(arr, H).argmin == "l1"


def test_pulled_back_star_nef_failure():
    arr = pullback_to_ruled(build_star_lines(5, seed=2), 2)
    X = arr.surface
    L = X.divisor(1, 3)
    res = certify_star_corollary(arr, L)
    check = res.certificate.check("nef test divisor")
    assert not check.passed
    assert check.divisor == Fraction(1, 6) * (3 * X.basis("f") - X.basis("C0"))
    assert res.kind is ResultKind.CANDIDATE
    assert configurational_epsilon(arr, L) == min_curve_ratio(arr, L).value == Fraction(3, 8)


def test_ruled_inequality_and_bound():
    arr = pullback_to_ruled(build_fermat_plane(3), 4)
    L = arr.surface.divisor(1, 5)
    rep = verify_hirzebruch_type_inequality(arr)
    # t2 + 3/4 t3 = 0 + 36; right side -16 + 9 (4 (5 - 2) - 40 + 4 + 16) = -88
    assert (rep.lhs, rep.rhs, rep.holds) == (36, -88, True)
    # 9 * 5 / (8 + 9/4 * 4 * 81 + 9/2 * (8 - 2 + 4 - 16)) = 45/692
    assert lower_bound_ruled(arr, L) == Fraction(45, 692)
    assert lower_bound_ruled(arr, L) <= configurational_epsilon(arr, L) == Fraction(5, 16)


def test_ruled_hypotheses_reported():
    arr = pullback_to_ruled(build_fermat_plane(3), 2)
    with pytest.raises(HypothesisError) as exc:
        verify_hirzebruch_type_inequality(arr)
    names = {c.hypothesis for c in exc.value.checks if not c.passed}
    assert names == {"e >= 4"}
    with pytest.raises(HypothesisError):
        lower_bound_ruled(build_fermat_plane(3), H)


def test_kodaira_double_cover():
    arr = double_cover_k3(build_fermat_plane(3))
    L = arr.surface.basis("L")
    rep = verify_kodaira_inequality(arr)
    assert (rep.lhs, rep.rhs, rep.holds) == (-60, 72, True)
    # 9 * 2 / (72 + 4 * 2 * 36 + 36)
    assert lower_bound_kodaira(arr, L) == Fraction(18, 396)
    res = equal_class_bounds(arr, L)
    assert (res.lower, res.upper) == (Fraction(1, 8), Fraction(1, 4))


def test_kodaira_not_applicable():
    with pytest.raises(HypothesisError):
        verify_kodaira_inequality(klein())
    arr = double_cover_k3(build_fermat_plane(3))
    stripped = type(arr)(arr.surface, tuple(type(c)(c.id, c.cls) for c in arr.curves), arr.points)
    with pytest.raises(MissingData):
        verify_kodaira_inequality(stripped)


def test_vacuous_bound_is_hypothesis_error():
    assert issubclass(VacuousBound, HypothesisError)


ARRANGEMENTS = [
    lambda: build_star_lines(6, seed=4),
    lambda: build_fermat_plane(4),
    klein,
    hesse_conics,
    lambda: quasi_pencil(6),
]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(ARRANGEMENTS))), st.fractions(min_value=Fraction(1, 20), max_value=20))
def test_homogeneity(idx, m):
    arr = ARRANGEMENTS[idx]()
    base, scaled = min_curve_ratio(arr, H), min_curve_ratio(arr, m * H)
    assert scaled.value == m * base.value and scaled.argmin == base.argmin
    assert configurational_epsilon(arr, m * H) == m * configurational_epsilon(arr, H)
    r1, r2 = equal_class_bounds(arr, H), equal_class_bounds(arr, m * H)
    if r1.kind is ResultKind.BOUNDS:
        assert (r2.lower, r2.upper) == (m * r1.lower, m * r1.upper)


@settings(max_examples=20, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10**5))
def test_exact_values_respect_sqrt_bound(d, seed):
    arr = build_star_lines(d, seed=seed)
    res = certify_star_corollary(arr, H)
    assert sqrt_upper_bound(H, len(arr.points)).admits(res.value)
