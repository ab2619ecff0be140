"""Exact scalars: rationals, elements of the cyclotomic field Q(zeta_n), and
exact comparison of a rational against a square root.

Rationals are :class:`fractions.Fraction`; the cyclotomic numbers are stored
as dense coefficient vectors in the power basis ``1, z, ..., z^(phi(n)-1)``
reduced modulo the n-th cyclotomic polynomial.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "parse_rational",
    "Ordering",
    "rat_cmp_sqrt",
    "cyclotomic_polynomial",
    "euler_phi",
    "CyclotomicNumber",
    "cyc_mul",
    "cyc_inverse",
    "zeta",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: every value flowing through the library is exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("refusing to treat a bool as a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with integer p, q. Decimal points are rejected."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    if any(c in s for c in ".eE"):
        raise ValueError(f"not an exact rational (floats are not accepted): {text!r}")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rat_cmp_sqrt(q, s) -> Ordering:
    """Compare ``q`` with ``sqrt(s)`` exactly (no floating point).

    For ``q >= 0`` this reduces to comparing ``q**2`` against ``s``, done by
    cross-multiplying integer numerators and denominators.
    """
    q = as_rational(q)
    s = as_rational(s)
    if s < 0:
        raise ValueError("square root of a negative rational")
    if q < 0:
        return Ordering.LESS
    lhs = q.numerator * q.numerator * s.denominator
    rhs = s.numerator * q.denominator * q.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


# --- integer polynomial helpers (coefficient lists, lowest degree first) ---

def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Obtained from ``x^n - 1`` by dividing out ``Phi_d`` for every proper
    divisor ``d`` of ``n``.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CyclotomicNumber:
    """An element of Q(zeta_n) in the reduced power basis.

    Instances are immutable and hashable; equality is coefficient equality,
    which is sound because the power basis is a Q-basis.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        order = int(order)
        phi_poly = cyclotomic_polynomial(order)
        deg = len(phi_poly) - 1
        raw = [as_rational(c) for c in coeffs]
        if len(raw) > deg:
            raw = _reduce(order, raw)
        raw += [Fraction(0)] * (deg - len(raw))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(raw))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors --
    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicNumber":
        return cls(order, [as_rational(value)])

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1) -> "CyclotomicNumber":
        """``zeta_order ** k`` for any integer k (negative allowed)."""
        k %= order
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        return cls(order, coeffs)

    # -- predicates --
    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic --
    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: Q(zeta_{self.order}) vs Q(zeta_{other.order})"
                )
            return other
        return CyclotomicNumber.from_rational(self.order, other)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CyclotomicNumber(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CyclotomicNumber(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, CyclotomicNumber):
            return cyc_mul(self, other)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return CyclotomicNumber(self.order, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return cyc_mul(self, cyc_inverse(o))

    def __rtruediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return cyc_mul(o, cyc_inverse(self))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else cyc_inverse(self)
        k = abs(k)
        result = CyclotomicNumber.from_rational(self.order, 1)
        while k:
            if k & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == c

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                h = hash((self.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.order}" + (f"^{k}" if k > 1 else "")
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _reduce(order: int, coeffs: Sequence[Fraction]) -> list[Fraction]:
    # remainder modulo the monic polynomial Phi_n, top-down
    phi_poly = cyclotomic_polynomial(order)
    deg = len(phi_poly) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            base = k - deg
            for j in range(deg):
                if phi_poly[j]:
                    work[base + j] -= c * phi_poly[j]
            work[k] = Fraction(0)
    work += [Fraction(0)] * (deg - len(work))
    return work[:deg]


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    """Product in Q(zeta_n), reduced modulo Phi_n."""
    if a.order != b.order:
        raise ValueError(f"cyclotomic order mismatch: {a.order} vs {b.order}")
    deg = a.degree
    prod = [Fraction(0)] * (2 * deg - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                prod[i + j] += x * y
    return CyclotomicNumber(a.order, _reduce(a.order, prod))


def cyc_inverse(a: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse, found by solving ``M_a x = 1`` where ``M_a`` is
    the matrix of multiplication by ``a`` on the power basis."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    if a.is_rational():
        return CyclotomicNumber.from_rational(a.order, 1 / a.coeffs[0])
    deg = a.degree
    # column k of M_a is a * z^k
    cols = []
    for k in range(deg):
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            prod[i + k] = x
        cols.append(_reduce(a.order, prod))
    aug = [[cols[k][r] for k in range(deg)] + [Fraction(1 if r == 0 else 0)] for r in range(deg)]
    for c in range(deg):
        piv = next(r for r in range(c, deg) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(deg):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
    return CyclotomicNumber(a.order, [aug[r][deg] for r in range(deg)])


def zeta(n: int, k: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.root_of_unity(n, k)
