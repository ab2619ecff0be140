"""Coordinate-level constructions: Fermat line arrangements in the plane,
the 48 lines on the Fermat quartic surface, and generic star arrangements."""
from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from ..arrangement import Arrangement
from ..exact import CyclotomicNumber, zeta
from ..lattice import abstract_lattice, projective_plane
from ..linalg import nullspace
from .projective import (
    GeometryError,
    ProjLine2,
    ProjLine3,
    arrangement_from_clusters,
    cluster_meets,
)

__all__ = [
    "fermat_plane_lines",
    "build_fermat_plane",
    "build_star_lines",
    "QUARTIC_TYPES",
    "fermat_quartic_lines",
    "fermat_quartic_line",
    "build_fermat_quartic_lines",
    "fermat_quartic_hyperplanes",
    "hyperplane_grouping_fermat_quartic",
    "on_fermat_quartic",
]


def fermat_plane_lines(n: int) -> dict[str, ProjLine2]:
    """Linear factors of ``(x^n - y^n)(y^n - z^n)(z^n - x^n)`` over Q(zeta_n)."""
    if n < 3:
        raise ValueError("Fermat arrangements need n >= 3")
    one = CyclotomicNumber.from_rational(n, 1)
    zero = one * 0
    lines = {}
    for j in range(n):
        w = zeta(n, j)
        lines[f"x{j}"] = ProjLine2((one, -w, zero))
        lines[f"y{j}"] = ProjLine2((zero, one, -w))
        lines[f"z{j}"] = ProjLine2((-w, zero, one))
    return lines


def build_fermat_plane(n: int, *, with_coordinates: bool = False):
    lines = fermat_plane_lines(n)
    P2 = projective_plane()
    H = P2.basis("H")
    arr, coords = arrangement_from_clusters(
        P2, {cid: H for cid in lines}, cluster_meets(lines), name=f"fermat-plane-{n}"
    )
    if with_coordinates:
        return arr, lines, coords
    return arr


def build_star_lines(d: int, seed: int = 0, *, max_attempts: int = 64) -> Arrangement:
    """``d`` lines with small random integer coefficients, no three concurrent."""
    if d < 2:
        raise ValueError("a star arrangement needs d >= 2")
    P2 = projective_plane()
    H = P2.basis("H")
    for attempt in range(max_attempts):
        rng = random.Random(seed * 1_000_003 + attempt)
        lines = {}
        for k in range(1, d + 1):
            while True:
                c = tuple(Fraction(rng.randint(-9, 9)) for _ in range(3))
                if any(c):
                    break
            lines[f"l{k}"] = ProjLine2(c)
        if len(set(lines.values())) < d:
            continue
        clusters = cluster_meets(lines)
        if len(clusters) != comb(d, 2):
            continue
        arr, _ = arrangement_from_clusters(
            P2, {cid: H for cid in lines}, clusters, name=f"star-{d}"
        )
        return arr
    raise GeometryError(f"no generic configuration of {d} lines after {max_attempts} attempts")


# --- the Fermat quartic x0^4 + x1^4 + x2^4 + x3^4 ---

# (first pair of coordinates, second pair): type A is x0 = a x1, x2 = b x3, etc.
QUARTIC_TYPES = {
    "A": ((0, 1), (2, 3)),
    "A'": ((0, 2), (1, 3)),
    "A''": ((0, 3), (1, 2)),
}
# zeta_8^k for odd k gives {zeta, -zeta, i zeta, -i zeta}
QUARTIC_EXPONENTS = (1, 3, 5, 7)


def _form(i: int, j: int, k: int) -> tuple[CyclotomicNumber, ...]:
    """Coefficients of ``x_i - zeta_8^k x_j``."""
    one = CyclotomicNumber.from_rational(8, 1)
    row = [one * 0] * 4
    row[i] = one
    row[j] = -zeta(8, k)
    return tuple(row)


def fermat_quartic_line(cid: str) -> ProjLine3:
    """Rebuild a line from its id ``"<type>:<a>:<b>"`` (a, b odd exponents of zeta_8)."""
    try:
        typ, a, b = cid.split(":")
        a, b = int(a), int(b)
        (i, j), (k, m) = QUARTIC_TYPES[typ]
    except (ValueError, KeyError):
        raise ValueError(f"not a Fermat quartic line id: {cid!r}") from None
    if a not in QUARTIC_EXPONENTS or b not in QUARTIC_EXPONENTS:
        raise ValueError(f"not a Fermat quartic line id: {cid!r}")
    return ProjLine3((_form(i, j, a), _form(k, m, b)))


def fermat_quartic_lines() -> dict[str, ProjLine3]:
    return {
        f"{typ}:{a}:{b}": fermat_quartic_line(f"{typ}:{a}:{b}")
        for typ in QUARTIC_TYPES
        for a in QUARTIC_EXPONENTS
        for b in QUARTIC_EXPONENTS
    }


def on_fermat_quartic(line: ProjLine3) -> bool:
    """Whether the quartic form vanishes identically on ``line``."""
    one = next(x for x in line.forms[0] if x != 0)
    one = one / one
    p, q = nullspace(line.forms, one)
    # a binary quartic vanishing at 5 distinct points of P^1 is zero
    for s in range(5):
        v = [x + s * y for x, y in zip(p, q)]
        if sum(c**4 for c in v) != 0:
            return False
    return True


def build_fermat_quartic_lines(*, with_coordinates: bool = False):
    """The 48 lines as an arrangement on an abstract K3 lattice.

    The lattice is generated by the hyperplane class ``H`` and the 48 line
    classes, with ``H^2 = 4``, ``H.l = 1``, ``l^2 = -2`` and ``l.l' = 1`` or
    ``0`` according to whether the lines meet.
    """
    lines = fermat_quartic_lines()
    clusters = cluster_meets(lines)
    ids = list(lines)
    index = {cid: k + 1 for k, cid in enumerate(ids)}
    rank = len(ids) + 1
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    gram[0][0] = Fraction(4)
    for cid, k in index.items():
        gram[0][k] = gram[k][0] = Fraction(1)
        gram[k][k] = Fraction(-2)
    for inc in clusters.values():
        for a in inc:
            for b in inc:
                if a != b:
                    gram[index[a]][index[b]] = Fraction(1)
    surface = abstract_lattice(
        gram,
        ["H", *ids],
        canonical=[0] * rank,
        chern_c2=24,
        canonical_square=0,
        ample_classes=[[1] + [0] * len(ids)],
        kodaira_dimension=0,
        name="Fermat quartic K3",
    )
    classes = {cid: surface.basis(cid) for cid in ids}
    arr, coords = arrangement_from_clusters(
        surface, classes, clusters, genera={cid: Fraction(0) for cid in ids}, name="fermat-quartic"
    )
    if with_coordinates:
        return arr, lines, coords
    return arr


def fermat_quartic_hyperplanes() -> dict[str, tuple]:
    """The 24 hyperplanes ``x_i = zeta_8^k x_j`` spanned by pairs of
    coordinates used by the three line types."""
    out = {}
    for typ, pairs in QUARTIC_TYPES.items():
        for i, j in pairs:
            for k in QUARTIC_EXPONENTS:
                out[f"x{i}=z^{k}*x{j}"] = _form(i, j, k)
    return out


def hyperplane_grouping_fermat_quartic(arr: Arrangement) -> list[tuple[str, list[str]]]:
    """For each of the 24 hyperplanes, the arrangement lines it contains.

    Each group has four lines, whose sum is therefore a hyperplane section;
    every line lies in exactly two groups.
    """
    lines = {cid: fermat_quartic_line(cid) for cid in arr.curve_ids}
    groups = []
    membership = {cid: 0 for cid in lines}
    for label, form in fermat_quartic_hyperplanes().items():
        members = [cid for cid, line in lines.items() if line.in_hyperplane(form)]
        if len(members) != 4:
            raise GeometryError(f"hyperplane {label} contains {len(members)} lines, expected 4")
        for cid in members:
            membership[cid] += 1
        groups.append((label, members))
    bad = [cid for cid, n in membership.items() if n != 2]
    if bad:
        raise GeometryError(f"lines not in exactly two hyperplane groups: {bad[:4]}")
    return groups

