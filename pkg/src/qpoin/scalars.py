"""Exact coefficient field Q(p)[beta] with p = q^(1/2) and beta^2 = p^2 + p^-2.

Every coefficient in the engine is a :class:`Scalar`.  A scalar is stored as
``(a + b*beta) / d`` with ``a, b, d`` integer polynomials in ``p`` (flint
``fmpz_poly``), ``gcd(a, b, d) = 1`` and ``d`` with positive leading
coefficient.  Negative powers of ``p`` live in ``d``.  This makes the
representation unique, so equality is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from flint import fmpz_poly

__all__ = [
    "Scalar",
    "Pole",
    "POLE",
    "Sqrt2Value",
    "ZERO",
    "ONE",
    "P",
    "Q",
    "BETA",
    "LAM",
    "qbracket",
    "qpow",
    "eval_numeric",
    "limit_q1",
]

_X = fmpz_poly([0, 1])
_ONE_POLY = fmpz_poly([1])
_ZERO_POLY = fmpz_poly([])
# beta^2 = (p^4 + 1) / p^2
_BETA2_NUM = fmpz_poly([1, 0, 0, 0, 1])
_BETA2_DEN = fmpz_poly([0, 0, 1])

Number = Union[int, Fraction, "Scalar"]


def _is_zero(f: fmpz_poly) -> bool:
    return f.degree() < 0


class Scalar:
    """Element of Q(p)[beta]; immutable."""

    __slots__ = ("a", "b", "d", "_hash")

    def __init__(self, a=0, b=0, d=1, _canonical=False):
        if not isinstance(a, fmpz_poly):
            a = fmpz_poly([a])
        if not isinstance(b, fmpz_poly):
            b = fmpz_poly([b])
        if not isinstance(d, fmpz_poly):
            d = fmpz_poly([d])
        if not _canonical:
            a, b, d = _canonicalize(a, b, d)
        self.a = a
        self.b = b
        self.d = d
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def coerce(cls, x) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, Fraction):
            return cls(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def from_polys(cls, num: fmpz_poly, den: fmpz_poly = _ONE_POLY,
                   beta_num: fmpz_poly = _ZERO_POLY) -> Scalar:
        """(num + beta_num*beta)/den with plain polynomials in p."""
        if _is_zero(den):
            raise ZeroDivisionError("zero denominator")
        return cls(num, beta_num, den)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return _is_zero(self.a) and _is_zero(self.b)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return _is_zero(self.b) and self.a == self.d

    def has_beta(self) -> bool:
        return not _is_zero(self.b)

    def as_fraction(self) -> Fraction | None:
        """The value as a rational number, or None if it depends on q."""
        if self.has_beta() or self.a.degree() > 0 or self.d.degree() > 0:
            return None
        return Fraction(int(self.a[0]) if self.a.degree() >= 0 else 0, int(self.d[0]))

    def rational_part(self) -> Scalar:
        return Scalar(self.a, 0, self.d)

    def beta_part(self) -> Scalar:
        """Coefficient B in A + B*beta."""
        return Scalar(self.b, 0, self.d)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, self.d, _canonical=True)

    def __add__(self, other) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.d == o.d:
            return Scalar(self.a + o.a, self.b + o.b, self.d)
        g = self.d.gcd(o.d)
        if g.degree() == 0 and g[0] == 1:
            return Scalar(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)
        s, t = self.d // g, o.d // g
        return Scalar(self.a * t + o.a * s, self.b * t + o.b * s, self.d * t)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        if _is_zero(self.b) and _is_zero(o.b):
            return Scalar(self.a * o.a, _ZERO_POLY, self.d * o.d)
        if _is_zero(self.b) or _is_zero(o.b):
            return Scalar(self.a * o.a, self.a * o.b + self.b * o.a, self.d * o.d)
        a = self.a * o.a * _BETA2_DEN + self.b * o.b * _BETA2_NUM
        b = (self.a * o.b + self.b * o.a) * _BETA2_DEN
        return Scalar(a, b, self.d * o.d * _BETA2_DEN)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        if _is_zero(self.b):
            return Scalar(self.d, _ZERO_POLY, self.a)
        # (A + B beta)^-1 = (A - B beta) / (A^2 - B^2 beta^2)
        norm = self.a * self.a * _BETA2_DEN - self.b * self.b * _BETA2_NUM
        return Scalar(self.d * self.a * _BETA2_DEN, -self.d * self.b * _BETA2_DEN, norm)

    def __truediv__(self, other) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self.a.coeffs()), tuple(self.b.coeffs()),
                               tuple(self.d.coeffs())))
        return self._hash

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        from .printing import format_scalar

        return format_scalar(self)


def _canonicalize(a: fmpz_poly, b: fmpz_poly, d: fmpz_poly):
    if _is_zero(d):
        raise ZeroDivisionError("zero denominator")
    if _is_zero(a) and _is_zero(b):
        return _ZERO_POLY, _ZERO_POLY, _ONE_POLY
    g = a.gcd(b) if not _is_zero(b) else a
    if _is_zero(a):
        g = b
    g = g.gcd(d)
    if not (g.degree() == 0 and g[0] == 1):
        a, b, d = a // g, b // g, d // g
    if d[d.degree()] < 0:
        a, b, d = -a, -b, -d
    return a, b, d


ZERO = Scalar()
ONE = Scalar(1)
P = Scalar(_X)
Q = Scalar(_X * _X)
BETA = Scalar(0, 1)
QINV = Q.inverse()
LAM = Q - QINV


def qpow(k: int) -> Scalar:
    """q^(k/2), i.e. p^k."""
    if k >= 0:
        return Scalar(_X ** k)
    return Scalar(1, 0, _X ** (-k))


def qbracket(n: int) -> Scalar:
    """[n] = (q^n - q^-n) / (q - q^-1)."""
    if n == 0:
        return ZERO
    return (qpow(2 * n) - qpow(-2 * n)) / LAM


# -- numeric evaluation and the q -> 1 limit ---------------------------------


class Pole:
    """Marker for a divergent q -> 1 limit."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Pole"


POLE = Pole()


@dataclass(frozen=True)
class Sqrt2Value:
    """Exact limit value ``rational + coeff*sqrt(2)`` with coeff != 0."""

    rational: Fraction
    coeff: Fraction

    def __float__(self) -> float:
        return float(self.rational) + float(self.coeff) * math.sqrt(2)


def _poly_at_one(f: fmpz_poly) -> int:
    return int(sum(f.coeffs())) if f.degree() >= 0 else 0


def limit_q1(x: Scalar) -> Fraction | Sqrt2Value | Pole:
    """Value at q = 1 (p = 1, beta = sqrt 2) of the fully cancelled fraction."""
    den = _poly_at_one(x.d)
    if den == 0:
        return POLE
    rational = Fraction(_poly_at_one(x.a), den)
    coeff = Fraction(_poly_at_one(x.b), den)
    if coeff == 0:
        return rational
    return Sqrt2Value(rational, coeff)


def _poly_mp(f: fmpz_poly, p) -> mpmath.mpf:
    return mpmath.polyval([int(c) for c in reversed(f.coeffs())], p) if f.degree() >= 0 else mpmath.mpf(0)


def eval_numeric(x: Scalar, q: float) -> float:
    """Evaluate at a positive real q; computed at 50 digits, rounded once."""
    if q <= 0:
        raise ValueError("q must be positive")
    with mpmath.workdps(50):
        qq = mpmath.mpf(q)
        p = mpmath.sqrt(qq)
        beta = mpmath.sqrt(qq + 1 / qq)
        den = _poly_mp(x.d, p)
        scale = max((abs(int(c)) for c in x.d.coeffs()), default=1) * max(1, p) ** max(x.d.degree(), 0)
        if abs(den) <= mpmath.mpf(10) ** -40 * scale:
            raise ZeroDivisionError(f"pole of {x} at q={q}")
        val = (_poly_mp(x.a, p) + _poly_mp(x.b, p) * beta) / den
        return float(val)
