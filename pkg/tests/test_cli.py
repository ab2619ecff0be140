import json
import subprocess
import sys

import pytest

from seshconf.cli import main
from seshconf.document import loads


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,curves,points",
    [
        (["fermat-plane", "3"], 9, 12),
        (["preset", "klein"], 21, 49),
        (["preset", "quasi_pencil", "6"], 6, 6),
        (["star", "5", "--seed", "2"], 5, 10),
    ],
)
def test_build(tmp_path, capsys, argv, curves, points):
    out = tmp_path / "a.json"
    code, _, _ = run(["build", *argv, "-o", str(out)], capsys)
    assert code == 0
    arr = loads(out.read_text())
    assert (arr.d, len(arr.points)) == (curves, points)


def test_build_quartic(tmp_path, capsys):
    out = tmp_path / "q.json"
    assert run(["build", "fermat-quartic", "-o", str(out)], capsys)[0] == 0
    arr = loads(out.read_text())
    assert (arr.d, len(arr.points)) == (48, 216)
    code, text, _ = run(["analyze", "-i", str(out), "--format", "json"], capsys)
    rep = json.loads(text)
    assert code == 0
    assert rep["line_bundle"] == "H"
    assert rep["min_curve_ratio"]["value"] == {"exact": "1/10", "decimal": "0.100000"}
    assert rep["seshadri"][0]["kind"] == "candidate"
    assert rep["sqrt_bound"]["certified_values_consistent"] is True
    assert rep["sqrt_bound"]["min_curve_ratio_vs_bound"] == "less"


def test_pullback_and_double_cover(tmp_path, capsys):
    src = tmp_path / "s.json"
    run(["build", "star", "5", "-o", str(src)], capsys)
    pb = tmp_path / "p.json"
    assert run(["build", "pullback", "2", "-i", str(src), "-o", str(pb)], capsys)[0] == 0
    code, text, _ = run(["analyze", "-i", str(pb), "-L", "C0+3f", "--format", "json"], capsys)
    rep = json.loads(text)
    assert rep["configurational_epsilon"]["exact"] == "3/8"
    star = rep["seshadri"][1]
    nef = [c for c in star["certificate"]["checks"] if c["hypothesis"] == "nef test divisor"][0]
    assert not nef["passed"] and "-1/6*C0 + 1/2*f" in nef["witness"]
    dc = tmp_path / "dc.json"
    assert run(["build", "double-cover", "-i", str(src), "-o", str(dc)], capsys)[0] == 0


def test_analyze_star_exact(tmp_path, capsys):
    src = tmp_path / "s.json"
    run(["build", "star", "5", "-o", str(src)], capsys)
    code, text, _ = run(["analyze", "-i", str(src), "--format", "json", "-L", "1"], capsys)
    rep = json.loads(text)
    star = rep["seshadri"][1]
    assert star["kind"] == "exact" and star["value"]["exact"] == "1/4"
    assert star["certificate"]["all_passed"]


def test_analyze_hesse_text(tmp_path, capsys):
    src = tmp_path / "h.json"
    run(["build", "preset", "hesse_conics", "-o", str(src)], capsys)
    code, text, _ = run(["analyze", "-i", str(src), "-L", "H"], capsys)
    assert code == 0
    assert "lower: 1/22 (~0.045455)" in text and "upper: 1/4 (~0.250000)" in text
    assert "open question" in text


def test_reports_byte_stable(tmp_path, capsys):
    src = tmp_path / "k.json"
    run(["build", "preset", "klein", "-o", str(src)], capsys)
    a = run(["analyze", "-i", str(src), "--format", "json"], capsys)[1]
    b = run(["analyze", "-i", str(src), "--format", "json"], capsys)[1]
    assert a == b
    assert json.loads(a)["digest"].startswith("sha256:")


def test_export(tmp_path, capsys):
    src = tmp_path / "k.json"
    run(["build", "preset", "quasi_pencil:4", "-o", str(src)], capsys)
    code, text, _ = run(["export", "-i", str(src)], capsys)
    assert code == 0 and text.splitlines()[2].startswith("q1\tH\tp0 p1")
    code, text, _ = run(["export", "-i", str(src), "--format", "json"], capsys)
    assert text == src.read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["analyze", "-i", "/nonexistent.json"],
        ["build", "fermat-plane"],
        ["build", "fermat-plane", "x"],
        ["build", "fermat-plane", "2"],
        ["build", "preset", "nope"],
        ["bogus"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(argv, capsys)
    assert code == 2 and err


def test_parse_error_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": 1, "surface": {"kind": "projective-plane"}, "curves": [{"id": "a", "class": [0.5]}], "points": []}')
    code, _, err = run(["analyze", "-i", str(bad)], capsys)
    assert code == 2 and "curves[0].class[0]" in err
    good = tmp_path / "good.json"
    run(["build", "star", "4", "-o", str(good)], capsys)
    code, _, err = run(["analyze", "-i", str(good), "-L", "H+E"], capsys)
    assert code == 2 and "unknown basis label 'E'" in err


def test_line_bundle_required_on_ruled(tmp_path, capsys):
    src, pb = tmp_path / "s.json", tmp_path / "p.json"
    run(["build", "star", "4", "-o", str(src)], capsys)
    run(["build", "pullback", "2", "-i", str(src), "-o", str(pb)], capsys)
    code, _, err = run(["analyze", "-i", str(pb)], capsys)
    assert code == 2 and "--line-bundle" in err


def test_verify_paper_module_entry(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "seshconf", "verify-paper", "--format", "json"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0, proc.stdout[-2000:]
    payload = json.loads(proc.stdout)
    assert payload["all_passed"] and len(payload["criteria"]) == 9
