from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from seshconf.arrangement import (
    Arrangement,
    Curve,
    Point,
    arrangement_from_incidence,
    has_free_quadruple,
    invariants,
    is_connected,
    is_star,
    natural_key,
    not_all_concurrent,
    satisfies_equal_class_assumption,
    validate,
    verify_count_identity,
)
from seshconf.errors import InvalidArrangement, MissingData
from seshconf.geometry import build_star_lines, klein, quasi_pencil
from seshconf.lattice import projective_plane, ruled_surface
from seshconf.seshadri import configurational_epsilon, min_curve_ratio


def _lines(ids, points):
    P2 = projective_plane()
    H = P2.basis("H")
    return arrangement_from_incidence(P2, {i: H for i in ids}, points)


def test_natural_key():
    assert sorted(["l10", "l2", "l1"], key=natural_key) == ["l1", "l2", "l10"]


def test_quasi_pencil_invariants():
    arr = quasi_pencil(5)
    s = invariants(arr)
    assert s.t == {2: 4, 4: 1}
    assert s.f0 == 5 and s.f1 == 12
    assert s.b == {"q1": 2, "q2": 2, "q3": 2, "q4": 2, "q5": 4}
    assert s.bs == 4
    assert s.f(0) == s.f0 and s.f(1) == s.f1 and s.f(2) == 4 * 4 + 16
    assert not_all_concurrent(arr)
    assert has_free_quadruple(quasi_pencil(5))


def test_count_identity_failure_detected():
    arr = _lines(["a", "b", "c"], [("p", ["a", "b"]), ("q", ["b", "c"])])
    rep = verify_count_identity(arr)
    assert not rep.holds and rep.lhs == 3 and rep.rhs == 2
    codes = [d.code for d in validate(arr, "lattice")]
    assert codes == ["transversality"]
    assert validate(arr) == []


def test_structural_diagnostics():
    P2 = projective_plane()
    H = P2.basis("H")
    arr = Arrangement(
        P2,
        (Curve("a", H), Curve("a", H), Curve("b", H)),
        (Point("p", frozenset({"a"})), Point("p", frozenset({"a", "z"}))),
    )
    codes = sorted(d.code for d in validate(arr))
    assert codes == ["disconnected", "duplicate-curve", "duplicate-point", "low-multiplicity", "unknown-curve"]
    with pytest.raises(InvalidArrangement) as exc:
        invariants(arr)
    assert len(exc.value.diagnostics) == 4


def test_disconnected_and_missing_class():
    arr = arrangement_from_incidence(
        projective_plane(), ["a", "b", "c", "d"], [("p", ["a", "b"]), ("q", ["c", "d"])]
    )
    assert not is_connected(arr)
    codes = [d.code for d in validate(arr, "lattice")]
    assert "disconnected" in codes and codes.count("missing-class") == 4
    with pytest.raises(MissingData):
        arr.classes()


def test_lattice_mismatch_and_pairing():
    X = ruled_surface(0, 1)
    f = X.basis("f")
    arr = arrangement_from_incidence(X, {"f1": f, "f2": f}, [("p", ["f1", "f2"])])
    diags = validate(arr, "lattice", assume_equal_classes=True)
    assert {d.code for d in diags} == {"transversality", "nonpositive-pairing"}


def test_star_and_equal_classes():
    arr = build_star_lines(6, seed=3)
    assert is_star(arr)
    assert satisfies_equal_class_assumption(arr)
    assert has_free_quadruple(arr)
    assert not is_star(klein())
    assert not satisfies_equal_class_assumption(_lines(["a", "b", "c"], [("p", ["a", "b", "c"])]))


def test_free_quadruple_pencil():
    # five concurrent lines: every four share the point
    arr = _lines([f"l{i}" for i in range(5)], [("p", [f"l{i}" for i in range(5)])])
    assert not has_free_quadruple(arr)
    assert not not_all_concurrent(arr)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_permutation_invariance(d, seed, rnd):
    arr = build_star_lines(d, seed=seed)
    ids = arr.curve_ids
    shuffled = ids[:]
    rnd.shuffle(shuffled)
    mapping = dict(zip(ids, shuffled))
    other = arr.relabeled(mapping)
    other = Arrangement(other.surface, tuple(reversed(other.curves)), tuple(reversed(other.points)))
    a, b = invariants(arr), invariants(other)
    assert (a.t, a.f0, a.f1, a.bs) == (b.t, b.f0, b.f1, b.bs)
    assert sorted(a.b.values()) == sorted(b.b.values())
    H = arr.surface.basis("H")
    assert configurational_epsilon(arr, H) == configurational_epsilon(other, H)
    assert min_curve_ratio(arr, H).value == min_curve_ratio(other, H).value


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 12), st.integers(0, 10**6))
def test_star_counts(d, seed):
    arr = build_star_lines(d, seed=seed)
    s = invariants(arr)
    assert s.t == {2: comb(d, 2)}
    assert s.f1 == sum(s.b.values())
    assert verify_count_identity(arr).holds
    assert validate(arr, "lattice", assume_equal_classes=True) == []
