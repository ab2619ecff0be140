"""Gaussian elimination over any exact field whose elements support
``+ - * /`` and comparison with ``0`` (Fractions, CyclotomicNumbers)."""
from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x != 0 else x for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [x - f * y if y != 0 else x for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], one) -> list[list]:
    """Basis of the right null space; ``one`` is the field's unit (fixes the type)."""
    reduced, pivots = rref(rows)
    ncols = len(rows[0])
    zero = one - one
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis


def normalize_projective(vec: Sequence):
    """Scale so that the first nonzero entry is 1."""
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    inv = 1 / lead
    return tuple(x * inv for x in vec)
