"""Points and lines in P^2 and P^3 over exact fields, and exact clustering of
pairwise intersections into singular points."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from ..arrangement import Arrangement, Curve, Point, natural_key
from ..lattice import DivisorClass, SurfaceModel
from ..linalg import normalize_projective, nullspace, rank, rref

__all__ = [
    "GeometryError",
    "ProjPoint",
    "ProjLine2",
    "ProjLine3",
    "line_meet_p2",
    "line_meet_p3",
    "cluster_meets",
    "arrangement_from_clusters",
]


class GeometryError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", normalize_projective(self.coords))

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ProjLine2:
    """The line ``a x + b y + c z = 0``."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 3:
            raise ValueError("a plane line needs three coefficients")
        object.__setattr__(self, "coeffs", normalize_projective(self.coeffs))

    def contains(self, p: ProjPoint) -> bool:
        return sum(a * x for a, x in zip(self.coeffs, p.coords)) == 0


@dataclass(frozen=True)
class ProjLine3:
    """A line in P^3 cut out by two independent linear forms, stored in
    reduced row-echelon form so equal lines compare equal."""

    forms: tuple

    def __post_init__(self):
        rows = [tuple(r) for r in self.forms]
        if len(rows) != 2 or any(len(r) != 4 for r in rows):
            raise ValueError("a line in P^3 needs two forms in four variables")
        reduced, pivots = rref(rows)
        if len(pivots) != 2:
            raise ValueError("the two forms are dependent")
        object.__setattr__(self, "forms", tuple(tuple(r) for r in reduced[:2]))

    def contains(self, p: ProjPoint) -> bool:
        return all(sum(a * x for a, x in zip(row, p.coords)) == 0 for row in self.forms)

    def in_hyperplane(self, form: Sequence) -> bool:
        return rank([*self.forms, tuple(form)]) == 2


def line_meet_p2(l1: ProjLine2, l2: ProjLine2) -> ProjPoint:
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    if all(x == 0 for x in cross):
        raise GeometryError("identical lines have no unique intersection")
    return ProjPoint(cross)


def line_meet_p3(l1: ProjLine3, l2: ProjLine3) -> ProjPoint | None:
    rows = [*l1.forms, *l2.forms]
    r = rank(rows)
    if r == 4:
        return None
    if r == 2:
        raise GeometryError("identical lines have no unique intersection")
    one = next(x for x in l1.forms[0] if x != 0)
    one = one / one
    (vec,) = nullspace(rows, one)
    return ProjPoint(vec)


def cluster_meets(lines: Mapping[str, ProjLine2 | ProjLine3]) -> dict[ProjPoint, frozenset[str]]:
    """Intersect every pair of lines and group the intersection points by
    exact canonical coordinates."""
    ids = list(lines)
    clusters: dict[ProjPoint, set[str]] = {}
    for a, b in combinations(ids, 2):
        la, lb = lines[a], lines[b]
        if isinstance(la, ProjLine2):
            p = line_meet_p2(la, lb)
        else:
            p = line_meet_p3(la, lb)
            if p is None:
                continue
        clusters.setdefault(p, set()).update((a, b))
    return {p: frozenset(s) for p, s in clusters.items()}


def arrangement_from_clusters(
    surface: SurfaceModel,
    curve_classes: Mapping[str, DivisorClass],
    clusters: Mapping[ProjPoint, frozenset[str]],
    *,
    genera: Mapping | None = None,
    name: str = "",
    point_prefix: str = "p",
) -> tuple[Arrangement, dict[str, ProjPoint]]:
    """Emit an :class:`Arrangement` (points numbered in a canonical order
    that does not depend on the input line order) plus the id -> coordinates map."""
    genera = genera or {}
    order = sorted(
        clusters.items(), key=lambda kv: sorted(natural_key(i) for i in kv[1])
    )
    points = []
    coords = {}
    for k, (p, inc) in enumerate(order, start=1):
        pid = f"{point_prefix}{k}"
        points.append(Point(pid, inc))
        coords[pid] = p
    curves = tuple(
        Curve(cid, curve_classes[cid], genera.get(cid))
        for cid in sorted(curve_classes, key=natural_key)
    )
    return Arrangement(surface, curves, tuple(points), name), coords
