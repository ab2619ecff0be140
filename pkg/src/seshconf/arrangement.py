"""Transversal curve arrangements as incidence structures.

An :class:`Arrangement` is a surface, a list of curves (each optionally
carrying a divisor class and a genus) and a list of singular points, each
recorded only by the set of curves through it.  Coordinates, when they
exist, live in :mod:`seshconf.geometry`.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .errors import InvalidArrangement, MissingData
from .exact import as_rational
from .lattice import DivisorClass, SurfaceModel, pair

__all__ = [
    "Curve",
    "Point",
    "Arrangement",
    "Diagnostic",
    "InvariantSummary",
    "CountIdentityReport",
    "natural_key",
    "invariants",
    "verify_count_identity",
    "validate",
    "is_star",
    "satisfies_equal_class_assumption",
    "is_connected",
    "not_all_concurrent",
    "has_free_quadruple",
    "arrangement_from_incidence",
    "check_assumption_star1",
]


def natural_key(s: str):
    """Sort key treating digit runs numerically, so ``l2 < l10``."""
    return tuple(int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", s))


@dataclass(frozen=True)
class Curve:
    id: str
    cls: DivisorClass | None = None
    genus: Fraction | None = None

    def __post_init__(self):
        if self.genus is not None and not isinstance(self.genus, Fraction):
            object.__setattr__(self, "genus", as_rational(self.genus))


@dataclass(frozen=True)
class Point:
    id: str
    incident: frozenset[str]

    def __post_init__(self):
        if not isinstance(self.incident, frozenset):
            object.__setattr__(self, "incident", frozenset(self.incident))

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    subject: str = ""

    def __str__(self):
        return f"{self.message} [{self.subject}]" if self.subject else self.message


@dataclass(frozen=True)
class Arrangement:
    surface: SurfaceModel
    curves: tuple[Curve, ...]
    points: tuple[Point, ...]
    name: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def d(self) -> int:
        return len(self.curves)

    @property
    def curve_ids(self) -> list[str]:
        return [c.id for c in self.curves]

    def curve(self, cid: str) -> Curve:
        idx = self._curve_index()
        return self.curves[idx[cid]]

    def _curve_index(self) -> dict[str, int]:
        if self._index is None:
            object.__setattr__(self, "_index", {c.id: k for k, c in enumerate(self.curves)})
        return self._index

    def classes(self) -> list[DivisorClass]:
        missing = [c.id for c in self.curves if c.cls is None]
        if missing:
            raise MissingData(f"curves without a divisor class: {', '.join(missing[:5])}")
        return [c.cls for c in self.curves]

    def points_on(self, cid: str) -> list[Point]:
        return [p for p in self.points if cid in p.incident]

    def shared_point_counts(self) -> Counter:
        """Map ``frozenset({i, j}) -> #points on both``."""
        counts: Counter = Counter()
        for p in self.points:
            for a, b in combinations(sorted(p.incident), 2):
                counts[frozenset((a, b))] += 1
        return counts

    def max_multiplicity(self) -> int:
        return max((p.multiplicity for p in self.points), default=0)

    def relabeled(self, curve_map: Mapping[str, str], point_map: Mapping[str, str] | None = None):
        point_map = point_map or {}
        curves = [Curve(curve_map.get(c.id, c.id), c.cls, c.genus) for c in self.curves]
        points = [
            Point(point_map.get(p.id, p.id), frozenset(curve_map.get(i, i) for i in p.incident))
            for p in self.points
        ]
        return Arrangement(self.surface, tuple(curves), tuple(points), self.name)


@dataclass(frozen=True)
class InvariantSummary:
    d: int
    t: dict[int, int]
    f0: int
    f1: int
    b: dict[str, int]
    bs: int

    def f(self, i: int) -> int:
        return sum(k**i * tk for k, tk in self.t.items())

    def tk(self, k: int) -> int:
        return self.t.get(k, 0)


@dataclass(frozen=True)
class CountIdentityReport:
    holds: bool
    lhs: Fraction
    rhs: Fraction


# --- validation ---

def _structural(arr: Arrangement) -> list[Diagnostic]:
    out = []
    ids = Counter(c.id for c in arr.curves)
    for cid, n in ids.items():
        if n > 1:
            out.append(Diagnostic("duplicate-curve", "duplicate curve id", cid))
    pids = Counter(p.id for p in arr.points)
    for pid, n in pids.items():
        if n > 1:
            out.append(Diagnostic("duplicate-point", "duplicate point id", pid))
    for p in arr.points:
        unknown = sorted(i for i in p.incident if i not in ids)
        if unknown:
            out.append(
                Diagnostic("unknown-curve", f"point refers to unknown curves {unknown}", p.id)
            )
        if p.multiplicity < 2:
            out.append(Diagnostic("low-multiplicity", "point below multiplicity 2", p.id))
    return out


def is_connected(arr: Arrangement) -> bool:
    """Curves connected through shared points (a single curve counts as connected)."""
    if not arr.curves:
        return False
    adj: dict[str, set[str]] = {c.id: set() for c in arr.curves}
    for p in arr.points:
        inc = [i for i in p.incident if i in adj]
        for i in inc:
            adj[i].update(inc)
    start = arr.curves[0].id
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(adj)


def validate(
    arr: Arrangement, level: str = "combinatorial", *, assume_equal_classes: bool = False
) -> list[Diagnostic]:
    """Check the standing hypotheses; never raises for violations.

    ``level="lattice"`` additionally compares, for each pair of curves, the
    number of shared points against the intersection number (transversal
    curves meet exactly in ``C_i . C_j`` points).  With
    ``assume_equal_classes`` every pairing must also be positive.
    """
    if level not in ("combinatorial", "lattice"):
        raise ValueError(f"unknown validation level {level!r}")
    out = _structural(arr)
    if arr.d < 2:
        out.append(Diagnostic("too-few-curves", "an arrangement needs at least 2 curves"))
    if arr.curves and not is_connected(arr):
        out.append(Diagnostic("disconnected", "not connected"))
    if level == "combinatorial":
        return out
    missing = [c.id for c in arr.curves if c.cls is None]
    for cid in missing:
        out.append(Diagnostic("missing-class", "curve has no divisor class", cid))
    if missing:
        return out
    for c in arr.curves:
        if c.cls.surface is not arr.surface and c.cls.surface != arr.surface:
            out.append(Diagnostic("surface-mismatch", "class lives on another surface", c.id))
            return out
    shared = arr.shared_point_counts()
    S = arr.surface
    for ci, cj in combinations(arr.curves, 2):
        ij = pair(S, ci.cls, cj.cls)
        n = shared.get(frozenset((ci.id, cj.id)), 0)
        if n != ij:
            out.append(
                Diagnostic(
                    "transversality",
                    f"curves share {n} points but intersect in {ij}",
                    f"{ci.id},{cj.id}",
                )
            )
        if assume_equal_classes and ij <= 0:
            out.append(
                Diagnostic("nonpositive-pairing", f"pairing {ij} is not positive", f"{ci.id},{cj.id}")
            )
    return out


def _require_structure(arr: Arrangement):
    bad = _structural(arr)
    if bad:
        raise InvalidArrangement(bad)


# --- invariants ---

def invariants(arr: Arrangement) -> InvariantSummary:
    _require_structure(arr)
    t = Counter(p.multiplicity for p in arr.points)
    b = {c.id: 0 for c in arr.curves}
    for p in arr.points:
        for i in p.incident:
            b[i] += 1
    f1 = sum(k * n for k, n in t.items())
    return InvariantSummary(
        d=arr.d,
        t=dict(sorted(t.items())),
        f0=len(arr.points),
        f1=f1,
        b=b,
        bs=max(b.values(), default=0),
    )


def verify_count_identity(arr: Arrangement) -> CountIdentityReport:
    """Compare the sum of pairwise intersection numbers with the number of
    curve pairs counted at the singular points, ``sum_k C(k,2) t_k``."""
    classes = arr.classes()
    S = arr.surface
    lhs = Fraction(0)
    for a, b in combinations(classes, 2):
        lhs += pair(S, a, b)
    summary = invariants(arr)
    rhs = Fraction(sum(comb(k, 2) * n for k, n in summary.t.items()))
    return CountIdentityReport(lhs == rhs, lhs, rhs)


def is_star(arr: Arrangement) -> bool:
    _require_structure(arr)
    return all(p.multiplicity == 2 for p in arr.points)


def satisfies_equal_class_assumption(arr: Arrangement) -> bool:
    """At least four curves, connected, all in one numerical class."""
    classes = arr.classes()
    if arr.d < 4 or not is_connected(arr):
        return False
    first = classes[0]
    return all(c.coeffs == first.coeffs for c in classes[1:])


def not_all_concurrent(arr: Arrangement) -> bool:
    """No single point lies on every curve."""
    return arr.max_multiplicity() < arr.d


def has_free_quadruple(arr: Arrangement) -> bool:
    """Some four curves have no point common to all four."""
    if arr.d < 4:
        return False
    big = [p.incident for p in arr.points if p.multiplicity >= 4]
    if sum(comb(len(s), 4) for s in big) < comb(arr.d, 4):
        return True
    covered = set()
    for s in big:
        covered.update(frozenset(q) for q in combinations(sorted(s), 4))
    return len(covered) < comb(arr.d, 4)


def arrangement_from_incidence(
    surface: SurfaceModel,
    curve_classes: Mapping[str, DivisorClass | None] | Iterable[str],
    incidences: Iterable[tuple[str, Iterable[str]]],
    *,
    genera: Mapping[str, Fraction] | None = None,
    name: str = "",
) -> Arrangement:
    if isinstance(curve_classes, Mapping):
        items = list(curve_classes.items())
    else:
        items = [(cid, None) for cid in curve_classes]
    genera = genera or {}
    curves = tuple(Curve(cid, cls, genera.get(cid)) for cid, cls in items)
    points = tuple(Point(pid, frozenset(inc)) for pid, inc in incidences)
    return Arrangement(surface, curves, points, name)


# short name kept for callers used to the original naming
check_assumption_star1 = satisfies_equal_class_assumption
