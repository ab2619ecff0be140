"""Combinatorial transforms of plane line arrangements onto other surfaces.

Neither transform constructs the covering map; both only rewrite the
incidence data and the classes, which is all the invariants consume.
"""
from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement, Curve, Point
from .errors import HypothesisError
from .lattice import SurfaceKind, k3_double_plane, ruled_surface

__all__ = ["pullback_to_ruled", "double_cover_k3"]


def _plane_degrees(arr: Arrangement) -> dict[str, int]:
    if arr.surface.kind is not SurfaceKind.PROJECTIVE_PLANE:
        raise HypothesisError(f"expected an arrangement on P2, got {arr.surface.describe()}")
    degrees = {}
    for c in arr.curves:
        if c.cls is None:
            raise HypothesisError(f"curve {c.id} has no class")
        deg = c.cls.coeffs[0]
        if deg.denominator != 1 or deg <= 0:
            raise HypothesisError(f"curve {c.id} has class {c.cls}, not a positive multiple of H")
        degrees[c.id] = int(deg)
    return degrees


def pullback_to_ruled(plane_arr: Arrangement, e: int) -> Arrangement:
    """Pull a line arrangement back along the degree-``e`` cover ``X_e -> X_1``.

    Lines go to curves of class ``C0 + e f``; every singular point has ``e``
    preimages with the same incident curves, so ``t_k`` becomes ``e t_k``.
    """
    if e < 1:
        raise ValueError("the ruled invariant must be >= 1")
    degrees = _plane_degrees(plane_arr)
    if any(d != 1 for d in degrees.values()):
        raise HypothesisError("only line arrangements (all classes H) can be pulled back")
    X = ruled_surface(0, e)
    cls = X.divisor(1, e)
    curves = tuple(Curve(c.id, cls, Fraction(0)) for c in plane_arr.curves)
    points = tuple(
        Point(f"{p.id}#{r}" if e > 1 else p.id, p.incident)
        for p in plane_arr.points
        for r in range(1, e + 1)
    )
    return Arrangement(X, curves, points, f"{plane_arr.name or 'arrangement'} on X_{e}")


def double_cover_k3(plane_arr: Arrangement) -> Arrangement:
    """Preimage of a plane arrangement in the double cover branched along a
    general sextic (missing every singular point).

    Each point has two preimages; a degree-``k`` curve becomes a curve of
    class ``k L`` whose genus follows from Riemann-Hurwitz (``6k`` branch
    points over a curve of genus ``(k-1)(k-2)/2``).
    """
    degrees = _plane_degrees(plane_arr)
    K3 = k3_double_plane()
    curves = []
    for c in plane_arr.curves:
        k = degrees[c.id]
        g0 = Fraction((k - 1) * (k - 2), 2)
        genus = (2 * (2 * g0 - 2) + 6 * k) / 2 + 1
        curves.append(Curve(c.id, K3.divisor(k), genus))
    points = tuple(Point(f"{p.id}#{r}", p.incident) for p in plane_arr.points for r in (1, 2))
    return Arrangement(K3, tuple(curves), points, f"{plane_arr.name or 'arrangement'} double cover")
