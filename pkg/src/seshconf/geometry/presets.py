"""Incidence-level presets: Klein, Wiman, Hesse conics, Hirzebruch
quasi-pencils and the Fermat plane arrangements without coordinates.

Klein and Wiman are generated from their symmetry groups: lines correspond
to the involutions of PSL(2,7) (resp. A6), and two lines pass through a
common point determined by the dihedral group the two involutions generate:

* if ``st`` has odd order, the point lies on exactly the involutions of
  ``<s, t>``;
* if ``st`` has even order ``m``, the point lies on the involutions that
  commute with ``z = (st)^(m/2)``, except ``z`` itself.

The resulting blocks cover every pair of lines exactly once; that, and the
multiplicity profile, are checked when the preset is built.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations, permutations, product

from ..arrangement import Arrangement, Curve, Point
from ..lattice import projective_plane
from .projective import GeometryError

__all__ = [
    "PRESET_NAMES",
    "preset",
    "klein",
    "wiman",
    "hesse_conics",
    "quasi_pencil",
    "fermat_plane_combinatorial",
]

PRESET_NAMES = ("klein", "wiman", "hesse_conics", "quasi_pencil", "fermat_plane_combinatorial")

Perm = tuple[int, ...]


def _compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def _order(p: Perm) -> int:
    ident = tuple(range(len(p)))
    k, cur = 1, p
    while cur != ident:
        cur = _compose(p, cur)
        k += 1
    return k


def _power(p: Perm, k: int) -> Perm:
    cur = tuple(range(len(p)))
    for _ in range(k):
        cur = _compose(p, cur)
    return cur


def _gl32() -> list[Perm]:
    """GL(3,2) = PSL(2,7) acting on the seven nonzero vectors of F_2^3."""
    group = []
    for cols in product(range(1, 8), repeat=3):
        images = []
        for v in range(1, 8):
            w = 0
            for bit in range(3):
                if v >> bit & 1:
                    w ^= cols[bit]
            images.append(w)
        if len(set(images)) == 7 and 0 not in images:
            group.append(tuple(w - 1 for w in images))
    return group


def _a6() -> list[Perm]:
    out = []
    for p in permutations(range(6)):
        inversions = sum(1 for i, j in combinations(range(6), 2) if p[i] > p[j])
        if inversions % 2 == 0:
            out.append(p)
    return out


def _involution_blocks(group: list[Perm]) -> tuple[list[Perm], list[frozenset[int]]]:
    ident = tuple(range(len(group[0])))
    invs = sorted(g for g in group if g != ident and _compose(g, g) == ident)
    index = {g: k for k, g in enumerate(invs)}
    blocks: dict[tuple[int, int], frozenset[int]] = {}
    for a, b in combinations(range(len(invs)), 2):
        if (a, b) in blocks:
            continue
        s, t = invs[a], invs[b]
        st = _compose(s, t)
        m = _order(st)
        if m % 2:
            members = {index[_compose(s, _power(st, k))] for k in range(m)}
        else:
            z = _power(st, m // 2)
            members = {
                index[u] for u in invs if u != z and _compose(u, z) == _compose(z, u)
            }
        block = frozenset(members)
        for pr in combinations(sorted(block), 2):
            if pr in blocks and blocks[pr] != block:
                raise GeometryError("inconsistent incidence blocks")
            blocks[pr] = block
    return invs, sorted(set(blocks.values()), key=lambda s: (-len(s), sorted(s)))


def _line_arrangement(prefix: str, nlines: int, blocks, name: str) -> Arrangement:
    P2 = projective_plane()
    H = P2.basis("H")
    curves = tuple(Curve(f"{prefix}{k + 1}", H) for k in range(nlines))
    points = tuple(
        Point(f"p{j + 1}", frozenset(f"{prefix}{k + 1}" for k in blk))
        for j, blk in enumerate(blocks)
    )
    return Arrangement(P2, curves, points, name)


@lru_cache(maxsize=None)
def klein() -> Arrangement:
    invs, blocks = _involution_blocks(_gl32())
    return _line_arrangement("k", len(invs), blocks, "klein")


@lru_cache(maxsize=None)
def wiman() -> Arrangement:
    invs, blocks = _involution_blocks(_a6())
    return _line_arrangement("w", len(invs), blocks, "wiman")


@lru_cache(maxsize=None)
def hesse_conics() -> Arrangement:
    """Twelve conics through the nine points of the affine plane over F_3.

    Each conic is the complement of one of the twelve affine lines, so it
    passes through six of the nine points; two conics coming from parallel
    lines share three of those points and meet once more in a double point.
    This gives ``t_8 = 9`` and ``t_2 = 12`` with every conic carrying eight
    singular points and every pair of conics meeting in four.
    """
    P2 = projective_plane()
    conic = 2 * P2.basis("H")
    pts = [(x, y) for x in range(3) for y in range(3)]
    directions = [(0, 1), (1, 0), (1, 1), (1, 2)]
    lines = []  # (direction index, offset, point set)
    for di, (dx, dy) in enumerate(directions):
        seen = set()
        for base in pts:
            line = frozenset(((base[0] + k * dx) % 3, (base[1] + k * dy) % 3) for k in range(3))
            if line not in seen:
                seen.add(line)
                lines.append((di, len(seen) - 1, line))
    cids = [f"c{k + 1}" for k in range(len(lines))]
    points = []
    for j, p in enumerate(pts):
        inc = frozenset(cid for cid, (_, _, line) in zip(cids, lines) if p not in line)
        points.append(Point(f"h{j + 1}", inc))
    extra = 0
    for (ca, la), (cb, lb) in combinations(zip(cids, lines), 2):
        if la[0] == lb[0]:
            extra += 1
            points.append(Point(f"q{extra}", frozenset((ca, cb))))
    curves = tuple(Curve(cid, conic) for cid in cids)
    return Arrangement(P2, curves, tuple(points), "hesse_conics")


def quasi_pencil(k: int) -> Arrangement:
    """``k - 1`` concurrent lines plus one line in general position."""
    if k < 4:
        raise ValueError("a quasi-pencil needs k >= 4")
    P2 = projective_plane()
    H = P2.basis("H")
    curves = tuple(Curve(f"q{i}", H) for i in range(1, k + 1))
    points = [Point("p0", frozenset(f"q{i}" for i in range(1, k)))]
    points += [Point(f"p{i}", frozenset((f"q{i}", f"q{k}"))) for i in range(1, k)]
    return Arrangement(P2, curves, tuple(points), f"quasi_pencil({k})")


def fermat_plane_combinatorial(n: int) -> Arrangement:
    """Incidences of ``(x^n - y^n)(y^n - z^n)(z^n - x^n)`` without coordinates.

    ``x_i, y_j, z_k`` meet in a triple point iff ``i + j + k = 0 mod n``;
    each family also has its own centre of multiplicity ``n``.
    """
    if n < 3:
        raise ValueError("Fermat arrangements need n >= 3")
    P2 = projective_plane()
    H = P2.basis("H")
    curves = tuple(Curve(f"{fam}{j}", H) for fam in "xyz" for j in range(n))
    points = []
    for fam in "xyz":
        points.append(Point(f"center_{fam}", frozenset(f"{fam}{j}" for j in range(n))))
    for i in range(n):
        for j in range(n):
            k = (-i - j) % n
            points.append(Point(f"t{i}_{j}", frozenset((f"x{i}", f"y{j}", f"z{k}"))))
    return Arrangement(P2, curves, tuple(points), f"fermat_plane_combinatorial({n})")


_CALL = re.compile(r"^\s*([a-z_-]+)\s*(?:[(:]\s*(\d+)\s*\)?)?\s*$")


def preset(name: str, param: int | None = None) -> Arrangement:
    """Look up a preset by name; ``"quasi_pencil(5)"`` and ``"quasi_pencil:5"``
    are accepted as well as ``preset("quasi_pencil", 5)``."""
    m = _CALL.match(name)
    if not m:
        raise ValueError(f"unknown preset {name!r}")
    key, inline = m.group(1), m.group(2)
    if inline is not None:
        if param is not None and int(inline) != param:
            raise ValueError("conflicting preset parameters")
        param = int(inline)
    key = key.replace("-", "_")
    if key == "klein":
        return klein()
    if key == "wiman":
        return wiman()
    if key in ("hesse_conics", "hesse"):
        return hesse_conics()
    if key == "quasi_pencil":
        if param is None:
            raise ValueError("quasi_pencil needs a parameter k >= 4")
        return quasi_pencil(param)
    if key == "fermat_plane_combinatorial":
        if param is None:
            raise ValueError("fermat_plane_combinatorial needs a parameter n >= 3")
        return fermat_plane_combinatorial(param)
    raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")

