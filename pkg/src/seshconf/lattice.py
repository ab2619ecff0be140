"""Numerical lattices of surfaces: intersection pairing, canonical class,
Chern numbers, adjunction genus and nef/ample tests.

Three kinds of surface are modelled:

* the projective plane (rank 1, basis ``H``),
* ruled surfaces ``X_e`` over a curve of genus ``g`` (basis ``C0, f`` with
  ``C0^2 = -e``, ``C0.f = 1``, ``f^2 = 0``),
* abstract lattices given by an explicit Gram matrix on a set of generators.
  The Gram matrix may be degenerate (generators need not be independent),
  which is how the K3 examples carry their line classes.

Nef/ample criteria are exact for the plane and for ruled surfaces with
``e >= 0``.  Abstract lattices only know what they are told: a class is
nef (ample) there if it is a nonnegative (positive) multiple of a class the
caller declared nef (ample); anything else raises :class:`UnsupportedSurface`.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import MissingData, SurfaceMismatch, UnsupportedSurface
from .exact import as_rational

__all__ = [
    "SurfaceKind",
    "SurfaceModel",
    "DivisorClass",
    "AdjunctionWarning",
    "KODAIRA_NEGATIVE",
    "projective_plane",
    "ruled_surface",
    "abstract_lattice",
    "k3_double_plane",
    "pair",
    "is_nef",
    "is_ample",
    "adjunction_genus",
    "nef_violation",
]

# Kodaira dimension "minus infinity"
KODAIRA_NEGATIVE = -1


class SurfaceKind(enum.Enum):
    PROJECTIVE_PLANE = "projective-plane"
    RULED = "ruled"
    ABSTRACT = "abstract"


def _frac_tuple(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class SurfaceModel:
    kind: SurfaceKind
    gram: tuple[tuple[Fraction, ...], ...]
    basis_labels: tuple[str, ...]
    canonical: tuple[Fraction, ...] | None = None
    chern_c2: Fraction | None = None
    canonical_square: Fraction | None = None
    genus: int | None = None  # base curve genus, ruled surfaces only
    e: int | None = None  # ruled invariant
    nef_classes: tuple[tuple[Fraction, ...], ...] = ()
    ample_classes: tuple[tuple[Fraction, ...], ...] = ()
    kodaira_dimension: int | None = None
    name: str = ""

    def __post_init__(self):
        n = len(self.gram)
        if n == 0:
            raise ValueError("lattice rank must be positive")
        if any(len(row) != n for row in self.gram):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if len(self.basis_labels) != n:
            raise ValueError("one basis label per generator is required")
        if len(set(self.basis_labels)) != n:
            raise ValueError("basis labels must be distinct")
        for vec in (self.canonical, *self.nef_classes, *self.ample_classes):
            if vec is not None and len(vec) != n:
                raise ValueError("class vector length must equal the lattice rank")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def canonical_class(self) -> "DivisorClass | None":
        if self.canonical is None:
            return None
        return DivisorClass(self, self.canonical)

    def divisor(self, *coeffs) -> "DivisorClass":
        if len(coeffs) == 1 and not isinstance(coeffs[0], (int, Fraction, str)):
            coeffs = tuple(coeffs[0])
        return DivisorClass(self, _frac_tuple(coeffs))

    def basis(self, label: str) -> "DivisorClass":
        idx = self.basis_labels.index(label)
        return DivisorClass(self, tuple(Fraction(int(k == idx)) for k in range(self.rank)))

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (Fraction(0),) * self.rank)

    def describe(self) -> str:
        if self.kind is SurfaceKind.PROJECTIVE_PLANE:
            return "P2"
        if self.kind is SurfaceKind.RULED:
            return f"X_{self.e} (ruled, genus {self.genus})"
        return self.name or f"abstract lattice of rank {self.rank}"


@dataclass(frozen=True)
class DivisorClass:
    surface: SurfaceModel = field(repr=False)
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.surface.rank:
            raise ValueError(
                f"class has {len(self.coeffs)} coefficients, lattice rank is {self.surface.rank}"
            )
        if not all(isinstance(c, Fraction) for c in self.coeffs):
            object.__setattr__(self, "coeffs", _frac_tuple(self.coeffs))

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            return False
        if other.surface is not self.surface and other.surface != self.surface:
            raise SurfaceMismatch("divisor classes live on different surfaces")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass(self.surface, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar):
        try:
            c = as_rational(scalar)
        except TypeError:
            return NotImplemented
        return DivisorClass(self.surface, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = as_rational(scalar)
        return DivisorClass(self.surface, tuple(a / c for a in self.coeffs))

    def dot(self, other: "DivisorClass") -> Fraction:
        return pair(self.surface, self, other)

    def __str__(self):
        terms = []
        for c, lab in zip(self.coeffs, self.surface.basis_labels):
            if not c:
                continue
            if c == 1:
                terms.append(lab)
            elif c == -1:
                terms.append(f"-{lab}")
            else:
                terms.append(f"{c}*{lab}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# --- constructors ---

def projective_plane() -> SurfaceModel:
    return SurfaceModel(
        kind=SurfaceKind.PROJECTIVE_PLANE,
        gram=((Fraction(1),),),
        basis_labels=("H",),
        canonical=(Fraction(-3),),
        chern_c2=Fraction(3),
        canonical_square=Fraction(9),
        kodaira_dimension=KODAIRA_NEGATIVE,
        name="P2",
    )


def ruled_surface(g: int, e: int) -> SurfaceModel:
    """Ruled surface over a genus-``g`` curve with invariant ``e``."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    g, e = int(g), int(e)
    return SurfaceModel(
        kind=SurfaceKind.RULED,
        gram=((Fraction(-e), Fraction(1)), (Fraction(1), Fraction(0))),
        basis_labels=("C0", "f"),
        canonical=(Fraction(-2), Fraction(2 * g - 2 - e)),
        chern_c2=Fraction(4 * (1 - g)),
        canonical_square=Fraction(8 * (1 - g)),
        genus=g,
        e=e,
        kodaira_dimension=KODAIRA_NEGATIVE,
        name=f"X_{e}" if g == 0 else f"X_{e},g={g}",
    )


def abstract_lattice(
    gram: Sequence[Sequence],
    labels: Sequence[str],
    *,
    canonical: Sequence | None = None,
    chern_c2=None,
    canonical_square=None,
    nef_classes: Iterable[Sequence] = (),
    ample_classes: Iterable[Sequence] = (),
    kodaira_dimension: int | None = None,
    name: str = "",
) -> SurfaceModel:
    return SurfaceModel(
        kind=SurfaceKind.ABSTRACT,
        gram=tuple(_frac_tuple(row) for row in gram),
        basis_labels=tuple(labels),
        canonical=None if canonical is None else _frac_tuple(canonical),
        chern_c2=None if chern_c2 is None else as_rational(chern_c2),
        canonical_square=None if canonical_square is None else as_rational(canonical_square),
        nef_classes=tuple(_frac_tuple(v) for v in nef_classes),
        ample_classes=tuple(_frac_tuple(v) for v in ample_classes),
        kodaira_dimension=kodaira_dimension,
        name=name,
    )


def k3_double_plane() -> SurfaceModel:
    """Rank-one model of a K3 double cover of the plane: the pulled-back
    hyperplane class ``L`` with ``L^2 = 2``, trivial canonical class,
    ``c2 = 24``."""
    return abstract_lattice(
        [[2]],
        ["L"],
        canonical=[0],
        chern_c2=24,
        canonical_square=0,
        ample_classes=[[1]],
        kodaira_dimension=0,
        name="K3 double plane",
    )


# --- operations ---

def pair(S: SurfaceModel, D1: DivisorClass, D2: DivisorClass) -> Fraction:
    """Intersection number ``D1 . D2`` on ``S``."""
    for D in (D1, D2):
        if D.surface is not S and D.surface != S:
            raise SurfaceMismatch(f"class {D} does not live on {S.describe()}")
    total = Fraction(0)
    gram = S.gram
    nz2 = [(j, b) for j, b in enumerate(D2.coeffs) if b]
    for i, a in enumerate(D1.coeffs):
        if not a:
            continue
        row = gram[i]
        for j, b in nz2:
            g = row[j]
            if g:
                total += a * g * b
    return total


def _positive_multiple_of(D: DivisorClass, vec: tuple[Fraction, ...]) -> Fraction | None:
    """Return c with ``D = c * vec`` if it exists, else None."""
    c = None
    for x, v in zip(D.coeffs, vec):
        if v == 0:
            if x != 0:
                return None
            continue
        ratio = x / v
        if c is None:
            c = ratio
        elif ratio != c:
            return None
    return c


def _ruled_ab(S: SurfaceModel, D: DivisorClass) -> tuple[Fraction, Fraction]:
    if S.e is None or S.e < 0:
        raise UnsupportedSurface(
            "nef/ample criterion is only implemented for ruled surfaces with e >= 0"
        )
    return D.coeffs[0], D.coeffs[1]


def _own(S: SurfaceModel, D: DivisorClass):
    if D.surface is not S and D.surface != S:
        raise SurfaceMismatch(f"class {D} does not live on {S.describe()}")


def is_nef(S: SurfaceModel, D: DivisorClass) -> bool:
    _own(S, D)
    if S.kind is SurfaceKind.PROJECTIVE_PLANE:
        return D.coeffs[0] >= 0
    if S.kind is SurfaceKind.RULED:
        a, b = _ruled_ab(S, D)
        return a >= 0 and b >= a * S.e
    if not any(D.coeffs):
        return True
    for vec in S.nef_classes + S.ample_classes:
        c = _positive_multiple_of(D, vec)
        if c is not None and c >= 0:
            return True
    raise UnsupportedSurface(f"nefness undecidable on this surface ({S.describe()})")


def is_ample(S: SurfaceModel, D: DivisorClass) -> bool:
    _own(S, D)
    if S.kind is SurfaceKind.PROJECTIVE_PLANE:
        return D.coeffs[0] > 0
    if S.kind is SurfaceKind.RULED:
        a, b = _ruled_ab(S, D)
        return a > 0 and b > a * S.e
    for vec in S.ample_classes:
        c = _positive_multiple_of(D, vec)
        if c is not None and c > 0:
            return True
    raise UnsupportedSurface(f"ampleness undecidable on this surface ({S.describe()})")


def nef_violation(S: SurfaceModel, D: DivisorClass) -> str | None:
    """A human-readable reason why ``D`` is not nef, or None if it is.

    Only for surfaces with a built-in criterion; the reason names a curve
    meeting ``D`` negatively.
    """
    if is_nef(S, D):
        return None
    if S.kind is SurfaceKind.PROJECTIVE_PLANE:
        return f"({D}).H = {D.coeffs[0]} < 0"
    a, b = D.coeffs
    if a < 0:
        return f"({D}).f = {a} < 0"
    return f"({D}).C0 = {b - a * S.e} < 0"


class AdjunctionWarning(UserWarning):
    """The adjunction genus is not a nonnegative integer, so the class is not
    that of a smooth irreducible curve."""


def adjunction_genus(S: SurfaceModel, D: DivisorClass) -> Fraction:
    """Genus ``g`` with ``2g - 2 = D^2 + K.D``."""
    K = S.canonical_class
    if K is None:
        raise MissingData(f"no canonical class on {S.describe()}")
    g = (pair(S, D, D) + pair(S, K, D)) / 2 + 1
    if g.denominator != 1 or g < 0:
        warnings.warn(
            f"adjunction genus {g} of {D} is not a nonnegative integer", AdjunctionWarning
        )
    return g
