"""Arrangement documents: a JSON file format with exact ``"p/q"`` rationals.

::

    {
      "format": 1,
      "name": "star-5",
      "surface": {"kind": "ruled", "genus": 0, "e": 2},
      "curves": [{"id": "l1", "class": ["1", "2"], "genus": "0"}, ...],
      "points": [{"id": "p1", "curves": ["l1", "l2"]}, ...]
    }

Surface kinds are ``projective-plane``, ``ruled`` (``genus``, ``e``) and
``abstract`` (``labels``, ``gram`` and optional ``canonical``, ``chern_c2``,
``canonical_square``, ``nef_classes``, ``ample_classes``,
``kodaira_dimension``, ``name``).  Floats are rejected everywhere.
"""
from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any

from .arrangement import Arrangement, Curve, Point
from .exact import parse_rational
from .lattice import (
    DivisorClass,
    SurfaceKind,
    SurfaceModel,
    abstract_lattice,
    projective_plane,
    ruled_surface,
)

__all__ = [
    "FORMAT_VERSION",
    "DocumentError",
    "to_document",
    "from_document",
    "dumps",
    "loads",
    "digest",
    "parse_line_bundle",
]

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """Parse failure with a position: ``line:col`` for JSON syntax errors,
    a field path such as ``curves[3].class[1]`` for schema errors."""

    def __init__(self, message: str, position: str = ""):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


def _rat_str(q: Fraction) -> str:
    return str(q)


def _surface_doc(S: SurfaceModel) -> dict[str, Any]:
    if S.kind is SurfaceKind.PROJECTIVE_PLANE:
        return {"kind": "projective-plane"}
    if S.kind is SurfaceKind.RULED:
        return {"kind": "ruled", "genus": S.genus, "e": S.e}
    doc: dict[str, Any] = {
        "kind": "abstract",
        "name": S.name,
        "labels": list(S.basis_labels),
        "gram": [[_rat_str(x) for x in row] for row in S.gram],
    }
    if S.canonical is not None:
        doc["canonical"] = [_rat_str(x) for x in S.canonical]
    if S.chern_c2 is not None:
        doc["chern_c2"] = _rat_str(S.chern_c2)
    if S.canonical_square is not None:
        doc["canonical_square"] = _rat_str(S.canonical_square)
    if S.nef_classes:
        doc["nef_classes"] = [[_rat_str(x) for x in v] for v in S.nef_classes]
    if S.ample_classes:
        doc["ample_classes"] = [[_rat_str(x) for x in v] for v in S.ample_classes]
    if S.kodaira_dimension is not None:
        doc["kodaira_dimension"] = S.kodaira_dimension
    return doc


def to_document(arr: Arrangement) -> dict[str, Any]:
    curves = []
    for c in arr.curves:
        entry: dict[str, Any] = {"id": c.id}
        if c.cls is not None:
            entry["class"] = [_rat_str(x) for x in c.cls.coeffs]
        if c.genus is not None:
            entry["genus"] = _rat_str(c.genus)
        curves.append(entry)
    order = {c.id: k for k, c in enumerate(arr.curves)}
    points = [
        {"id": p.id, "curves": sorted(p.incident, key=lambda i: (order.get(i, len(order)), i))}
        for p in arr.points
    ]
    return {
        "format": FORMAT_VERSION,
        "name": arr.name,
        "surface": _surface_doc(arr.surface),
        "curves": curves,
        "points": points,
    }


def dumps(arr: Arrangement, *, indent: int | None = 1) -> str:
    return json.dumps(to_document(arr), indent=indent) + "\n"


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


# --- parsing ---

def _rat(value, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError("floats are not accepted; write exact rationals as \"p/q\"", path)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise DocumentError(f"expected a rational string, got {type(value).__name__}", path)
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc), path) from None


def _int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError("expected an integer", path)
    return value


def _vec(value, path: str, length: int | None = None) -> list[Fraction]:
    if not isinstance(value, list):
        raise DocumentError("expected a list of rationals", path)
    if length is not None and len(value) != length:
        raise DocumentError(f"expected {length} entries, got {len(value)}", path)
    return [_rat(v, f"{path}[{k}]") for k, v in enumerate(value)]


def _get(obj: dict, key: str, path: str):
    if key not in obj:
        raise DocumentError(f"missing field {key!r}", path)
    return obj[key]


def _parse_surface(doc, path: str) -> SurfaceModel:
    if not isinstance(doc, dict):
        raise DocumentError("expected an object", path)
    kind = _get(doc, "kind", path)
    if kind == "projective-plane":
        return projective_plane()
    if kind == "ruled":
        g = _int(_get(doc, "genus", path), f"{path}.genus")
        e = _int(_get(doc, "e", path), f"{path}.e")
        if g < 0:
            raise DocumentError("genus must be nonnegative", f"{path}.genus")
        return ruled_surface(g, e)
    if kind != "abstract":
        raise DocumentError(f"unknown surface kind {kind!r}", f"{path}.kind")
    labels = _get(doc, "labels", path)
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels) or not labels:
        raise DocumentError("expected a nonempty list of strings", f"{path}.labels")
    n = len(labels)
    gram_doc = _get(doc, "gram", path)
    if not isinstance(gram_doc, list) or len(gram_doc) != n:
        raise DocumentError(f"expected a {n}x{n} matrix", f"{path}.gram")
    gram = [_vec(row, f"{path}.gram[{i}]", n) for i, row in enumerate(gram_doc)]
    opt = {}
    if "canonical" in doc:
        opt["canonical"] = _vec(doc["canonical"], f"{path}.canonical", n)
    for key in ("chern_c2", "canonical_square"):
        if key in doc:
            opt[key] = _rat(doc[key], f"{path}.{key}")
    for key in ("nef_classes", "ample_classes"):
        if key in doc:
            vs = doc[key]
            if not isinstance(vs, list):
                raise DocumentError("expected a list of class vectors", f"{path}.{key}")
            opt[key] = [_vec(v, f"{path}.{key}[{k}]", n) for k, v in enumerate(vs)]
    if "kodaira_dimension" in doc:
        opt["kodaira_dimension"] = _int(doc["kodaira_dimension"], f"{path}.kodaira_dimension")
    name = doc.get("name", "")
    try:
        return abstract_lattice(gram, labels, name=name, **opt)
    except ValueError as exc:
        raise DocumentError(str(exc), path) from None


def from_document(doc) -> Arrangement:
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", "$")
    version = _get(doc, "format", "$")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {version!r}", "format")
    S = _parse_surface(_get(doc, "surface", "$"), "surface")
    curves_doc = _get(doc, "curves", "$")
    if not isinstance(curves_doc, list):
        raise DocumentError("expected a list", "curves")
    curves = []
    for k, c in enumerate(curves_doc):
        path = f"curves[{k}]"
        if not isinstance(c, dict):
            raise DocumentError("expected an object", path)
        cid = _get(c, "id", path)
        if not isinstance(cid, str) or not cid:
            raise DocumentError("curve id must be a nonempty string", f"{path}.id")
        cls = None
        if "class" in c:
            cls = DivisorClass(S, tuple(_vec(c["class"], f"{path}.class", S.rank)))
        genus = _rat(c["genus"], f"{path}.genus") if "genus" in c else None
        curves.append(Curve(cid, cls, genus))
    points_doc = _get(doc, "points", "$")
    if not isinstance(points_doc, list):
        raise DocumentError("expected a list", "points")
    points = []
    for k, p in enumerate(points_doc):
        path = f"points[{k}]"
        if not isinstance(p, dict):
            raise DocumentError("expected an object", path)
        pid = _get(p, "id", path)
        if not isinstance(pid, str) or not pid:
            raise DocumentError("point id must be a nonempty string", f"{path}.id")
        inc = _get(p, "curves", path)
        if not isinstance(inc, list) or not all(isinstance(i, str) for i in inc):
            raise DocumentError("expected a list of curve ids", f"{path}.curves")
        if len(set(inc)) != len(inc):
            raise DocumentError("repeated curve id", f"{path}.curves")
        points.append(Point(pid, frozenset(inc)))
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("expected a string", "name")
    return Arrangement(S, tuple(curves), tuple(points), name)


def loads(text: str) -> Arrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][\w:'.]*)?\s*")


def parse_line_bundle(text: str, surface: SurfaceModel) -> DivisorClass:
    """``"1,3"`` / ``"1/2,-3/4"`` (coefficients on the basis) or a linear
    expression in the basis labels such as ``"C0+3f"`` or ``"H"``."""
    s = text.strip()
    if not s:
        raise DocumentError("empty line bundle", "--line-bundle")
    if not re.search(r"[A-Za-z_]", s):
        parts = s.split(",")
        if len(parts) != surface.rank:
            raise DocumentError(
                f"expected {surface.rank} coefficients, got {len(parts)}", "--line-bundle"
            )
        coeffs = tuple(_rat(p.strip(), f"--line-bundle[{k}]") for k, p in enumerate(parts))
        return DivisorClass(surface, coeffs)
    coeffs = [Fraction(0)] * surface.rank
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise DocumentError(f"cannot parse {s[pos:]!r}", f"--line-bundle col {pos + 1}")
        sign, num, label = m.groups()
        if sign is None and not first:
            raise DocumentError("expected + or -", f"--line-bundle col {pos + 1}")
        if label is None:
            raise DocumentError("each term needs a basis label", f"--line-bundle col {pos + 1}")
        if label not in surface.basis_labels:
            raise DocumentError(
                f"unknown basis label {label!r}; known: {', '.join(surface.basis_labels[:6])}",
                f"--line-bundle col {pos + 1}",
            )
        c = parse_rational(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        coeffs[surface.basis_labels.index(label)] += c
        pos = m.end()
        first = False
    return DivisorClass(surface, tuple(coeffs))
