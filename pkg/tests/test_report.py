from fractions import Fraction

from seshconf.arrangement import arrangement_from_incidence
from seshconf.geometry import build_fermat_plane, hesse_conics
from seshconf.lattice import projective_plane, ruled_surface
from seshconf.linalg import nullspace, rank, rref
from seshconf.report import analyze, decimal6, rational, render_text
from seshconf.transforms import double_cover_k3, pullback_to_ruled


def test_decimal_rendering():
    assert decimal6(Fraction(1, 22)) == "0.045455"
    assert decimal6(Fraction(-2, 3)) == "-0.666667"
    assert decimal6(Fraction(5)) == "5.000000"
    assert rational(Fraction(1, 8)) == {"exact": "1/8", "decimal": "0.125000"}


def test_report_sections_and_order():
    arr = hesse_conics()
    rep = analyze(arr, projective_plane().basis("H"))
    assert list(rep)[:6] == ["command", "input", "digest", "arrangement", "surface", "line_bundle"]
    assert rep["seshadri"][2]["kind"] == "bounds"
    assert rep["configurational_lower_bounds"]["ruled"].keys() == {"not_applicable"}
    text = render_text(rep)
    assert text.startswith("command: analyze\n") and "upper: 1/4 (~0.250000)" in text


def test_report_lower_bounds():
    pb = pullback_to_ruled(build_fermat_plane(3), 4)
    rep = analyze(pb, pb.surface.divisor(1, 5))
    assert rep["configurational_lower_bounds"]["ruled"]["exact"] == "45/692"
    assert rep["inequalities"]["ruled"]["holds"] is True
    dc = double_cover_k3(build_fermat_plane(3))
    rep = analyze(dc, dc.surface.basis("L"))
    assert rep["configurational_lower_bounds"]["kodaira"]["exact"] == "1/22"
    assert rep["inequalities"]["kodaira"] == {"holds": True, "lhs": "-60", "rhs": "72"}


def test_negative_e_warns_instead_of_failing():
    X = ruled_surface(1, -1)
    cls = X.divisor(1, 0)
    pts = [("p1", ["c0", "c1"]), ("p2", ["c1", "c2"]), ("p3", ["c0", "c2"])]
    arr = arrangement_from_incidence(X, {f"c{i}": cls for i in range(3)}, pts)
    rep = analyze(arr, X.divisor(1, 1))
    assert any("undecidable" in w for w in rep["warnings"])


def test_linalg():
    F = Fraction
    m, piv = rref([[F(2), F(4)], [F(1), F(3)]])
    assert piv == [0, 1] and m == [[1, 0], [0, 1]]
    assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    (v,) = nullspace([[F(1), F(1), F(0)], [F(0), F(1), F(1)]], F(1))
    assert v[1] == -v[0] and v[2] == v[0] != 0
