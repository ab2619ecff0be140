import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seshconf.arrangement import invariants
from seshconf.document import DocumentError, digest, dumps, from_document, loads, parse_line_bundle, to_document
from seshconf.geometry import (
    build_fermat_plane,
    build_star_lines,
    hesse_conics,
    klein,
    quasi_pencil,
    wiman,
)
from seshconf.lattice import projective_plane, ruled_surface
from seshconf.transforms import double_cover_k3, pullback_to_ruled


def _roundtrip(arr):
    back = loads(dumps(arr))
    assert back == arr
    assert invariants(back) == invariants(arr)
    assert back.shared_point_counts() == arr.shared_point_counts()
    assert dumps(back) == dumps(arr)


@pytest.mark.parametrize(
    "make",
    [
        klein,
        wiman,
        hesse_conics,
        lambda: quasi_pencil(7),
        lambda: build_fermat_plane(5),
        lambda: pullback_to_ruled(klein(), 3),
        lambda: double_cover_k3(build_fermat_plane(3)),
    ],
)
def test_roundtrip_presets(make):
    _roundtrip(make())


def test_roundtrip_quartic(quartic):
    _roundtrip(quartic)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10**6), st.integers(0, 5))
def test_roundtrip_random(d, seed, e):
    arr = build_star_lines(d, seed=seed)
    _roundtrip(arr if e == 0 else pullback_to_ruled(arr, e))


def test_document_header():
    doc = to_document(quasi_pencil(4))
    assert doc["format"] == 1 and doc["surface"] == {"kind": "projective-plane"}
    assert doc["curves"][0] == {"id": "q1", "class": ["1"]}
    assert digest("x").startswith("sha256:")


def _doc():
    return json.loads(dumps(pullback_to_ruled(quasi_pencil(4), 2)))


def test_float_rejected_with_path():
    doc = _doc()
    doc["curves"][2]["class"][1] = 2.0
    with pytest.raises(DocumentError) as exc:
        from_document(doc)
    assert exc.value.position == "curves[2].class[1]"
    doc["curves"][2]["class"][1] = "2.0"
    with pytest.raises(DocumentError):
        from_document(doc)


@pytest.mark.parametrize(
    "mutate,position",
    [
        (lambda d: d.pop("points"), "$"),
        (lambda d: d.update(format=2), "format"),
        (lambda d: d["surface"].update(kind="torus"), "surface.kind"),
        (lambda d: d["curves"][0].update({"class": ["1"]}), "curves[0].class"),
        (lambda d: d["points"][1].update(curves=["q1", "q1"]), "points[1].curves"),
        (lambda d: d["surface"].update(e="2"), "surface.e"),
    ],
)
def test_schema_errors(mutate, position):
    doc = _doc()
    mutate(doc)
    with pytest.raises(DocumentError) as exc:
        from_document(doc)
    assert exc.value.position == position


def test_json_syntax_error_position():
    with pytest.raises(DocumentError) as exc:
        loads('{\n  "format": 1,\n  oops\n}')
    assert exc.value.position == "line 3 column 3"


def test_line_bundle_parsing():
    X = ruled_surface(0, 2)
    assert parse_line_bundle("C0+3f", X).coeffs == (1, 3)
    assert parse_line_bundle(" 1/2*C0 - f ", X).coeffs == (Fraction(1, 2), -1)
    assert parse_line_bundle("1/1,3/1", X).coeffs == (1, 3)
    assert parse_line_bundle("H", projective_plane()).coeffs == (1,)
    for bad in ("", "1,2,3", "C0+g", "C0 f", "0.5,1", "3"):
        with pytest.raises(DocumentError):
            parse_line_bundle(bad, X)
