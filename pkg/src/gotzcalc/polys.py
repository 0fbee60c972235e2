"""Exact univariate polynomial arithmetic over the rationals.

A polynomial in the degree variable d is stored as a dense tuple of
``fractions.Fraction`` coefficients, constant term first, with the trailing
(highest-index) coefficient nonzero.  The zero polynomial is the empty tuple
and its degree is ``None``, never a number.

The basic building block everywhere else is the *binomial polynomial*

    binom_poly(c, a) = binom(d + c, a) = prod_{j=1..a} (d + c - a + j) / j,

the polynomial of degree exactly a with leading coefficient 1/a!.  This is the
polynomial convention: binom_poly(-3, 0) is the constant 1 whatever the sign
of d - 3.  The integer convention (binom(x, y) = 0 for x < y) lives in
:mod:`gotzcalc.macaulay` only.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

Rational = Fraction


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational coefficient")


class RationalPoly:
    """Dense exact polynomial; immutable and hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, d) -> Fraction:
        """Exact value at an integer (or rational) argument."""
        x = _coerce(d)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "RationalPoly":
        other = self._promote(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            self.coefficient(i) + other.coefficient(i) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPoly":
        return self + (-self._promote(other))

    def __rsub__(self, other) -> "RationalPoly":
        return self._promote(other) - self

    def __mul__(self, other) -> "RationalPoly":
        other = self._promote(other)
        if self.is_zero() or other.is_zero():
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    @staticmethod
    def _promote(other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly.constant(other)

    def shift(self, t: int) -> "RationalPoly":
        """The polynomial P(d + t)."""
        x_plus_t = RationalPoly((t, 1))
        acc = RationalPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * x_plus_t + RationalPoly.constant(c)
        return acc

    def difference(self) -> "RationalPoly":
        """First backward difference P(d) - P(d - 1); drops the degree by one."""
        return self - self.shift(-1)

    def is_integer_valued(self) -> bool:
        """True iff P(d) is an integer for every integer d.

        A polynomial of degree k is integer valued iff it is so at k + 1
        consecutive integers, so checking d = 0..deg suffices.
        """
        if self.is_zero():
            return True
        return all(self(d).denominator == 1 for d in range(len(self.coeffs)))

    @classmethod
    def from_text(cls, text: str) -> "RationalPoly":
        """Parse the comma-separated constant-first format, e.g. "2,3" = 3d + 2."""
        text = text.strip()
        if not text:
            return cls.zero()
        try:
            return cls(Fraction(part.strip()) for part in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad polynomial text {text!r}: {exc}") from None

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "RationalPoly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mon = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            if mon and abs(c) == 1:
                body = mon
            elif mon:
                body = f"{abs(c)}*{mon}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{body}" if not parts else f" {sign} {body}")
        return f"RationalPoly({''.join(parts)})"


class BinomialTerm:
    """The polynomial binom(d + c, a) for an integer offset c and top a >= 0."""

    __slots__ = ("offset", "top")

    def __init__(self, offset: int, top: int):
        if top < 0:
            raise ValueError("binomial top must be nonnegative")
        object.__setattr__(self, "offset", int(offset))
        object.__setattr__(self, "top", int(top))

    def __setattr__(self, name, value):
        raise AttributeError("BinomialTerm is immutable")

    def poly(self) -> RationalPoly:
        return binom_poly(self.offset, self.top)

    def __eq__(self, other):
        return (
            isinstance(other, BinomialTerm)
            and (self.offset, self.top) == (other.offset, other.top)
        )

    def __hash__(self):
        return hash((self.offset, self.top))

    def __repr__(self):
        return f"BinomialTerm(d{self.offset:+d} choose {self.top})"


def binom_poly(c: int, a: int) -> RationalPoly:
    """binom(d + c, a) as an explicit polynomial; the constant 1 for a = 0."""
    if a < 0:
        raise ValueError("binomial top must be nonnegative")
    acc = RationalPoly.constant(1)
    for j in range(1, a + 1):
        acc = acc * RationalPoly((c - a + j, 1))
    return acc * Fraction(1, factorial(a))


def interpolate(points: Sequence[tuple[int, Fraction]]) -> RationalPoly:
    """Exact Lagrange interpolation through points (d, value) with distinct d."""
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = RationalPoly.zero()
    for i, (xi, yi) in enumerate(points):
        basis = RationalPoly.constant(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = basis * RationalPoly((-xj, 1))
            denom *= xi - xj
        result = result + basis * (_coerce(yi) / denom)
    return result
