"""Chern data of rank-2 coherent sheaves on P^3 and the c2 bounds.

Hirzebruch-Riemann-Roch gives the Hilbert polynomial of a rank-2 coherent
sheaf on P^3 with Chern classes (c1, c2, c3) as

    P(d) = (1/3) d^3 + (2 + c1/2) d^2 + (c1^2/2 + 2 c1 + 11/3 - c2) d + cbar,
    cbar = c1^3/6 + c1^2 + 11 c1/6 - c1 c2/2 - 2 c2 + c3/2 + 2.

The map is triangular, so the Chern classes are recovered from the
coefficients one at a time, and each must come out an integer.

For globally generated sheaves the Hilbert polynomial has a Gotzmann
representation; its degree-3 part is forced to be
binom(d+3, 3) + binom(d+2, 3), the degree-2 part has c1 + 1 terms, and the
leftover linear coefficient c1^2 + 3 c1 + 2 - c2 must be nonnegative.  That
yields the bound c2 <= c1^2 + 3 c1 + 2 for any globally generated rank-2
coherent sheaf, to be contrasted with the sharper vector-bundle bound
c2 <= (2 c1^3 - 4 c1^2 + 2)/(3 c1 - 4) for non-split bundles with c1 >= 4.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import NonIntegralChern, WrongShape
from .polys import RationalPoly, binom_poly


@dataclass(frozen=True)
class ChernData:
    c1: int
    c2: int
    c3: int


def _cbar(c1: int, c2: int, c3: int) -> Fraction:
    return (
        Fraction(c1**3, 6)
        + c1**2
        + Fraction(11 * c1, 6)
        - Fraction(c1 * c2, 2)
        - 2 * c2
        + Fraction(c3, 2)
        + 2
    )


def hp_from_chern(c: ChernData) -> RationalPoly:
    """Hilbert polynomial of a rank-2 sheaf on P^3 with Chern data c."""
    return RationalPoly(
        (
            _cbar(c.c1, c.c2, c.c3),
            Fraction(c.c1**2, 2) + 2 * c.c1 + Fraction(11, 3) - c.c2,
            2 + Fraction(c.c1, 2),
            Fraction(1, 3),
        )
    )


def _require_rank2_p3_shape(P: RationalPoly):
    if P.degree != 3 or P.leading_coefficient != Fraction(1, 3):
        raise WrongShape(
            "rank-2 on P^3 needs degree 3 and leading coefficient 1/3"
        )


def chern_from_hp(P: RationalPoly) -> ChernData:
    """Invert hp_from_chern, solving for c1, then c2, then c3.

    Raises WrongShape unless deg P = 3 with leading coefficient 1/3, and
    NonIntegralChern when a solved class is not an integer.
    """
    _require_rank2_p3_shape(P)
    solved = []
    c1 = 2 * (P.coefficient(2) - 2)
    solved.append(c1)
    if c1.denominator == 1:
        c1 = int(c1)
        c2 = Fraction(c1**2, 2) + 2 * c1 + Fraction(11, 3) - P.coefficient(1)
        solved.append(c2)
        if c2.denominator == 1:
            c2 = int(c2)
            c3 = 2 * (P.coefficient(0) - _cbar(c1, c2, 0))
            solved.append(c3)
            if c3.denominator == 1:
                return ChernData(c1, c2, int(c3))
    raise NonIntegralChern(f"solved classes {solved} are not all integers")


def c2_upper_bound(c1: int) -> int:
    """The coherent-sheaf bound c1^2 + 3 c1 + 2 (valid for c1 >= 0)."""
    if c1 < 0:
        raise ValueError("bound applies to c1 >= 0")
    return c1**2 + 3 * c1 + 2


def chi12_bound(c1: int) -> Fraction:
    """The non-split vector-bundle bound (2 c1^3 - 4 c1^2 + 2)/(3 c1 - 4)."""
    if c1 < 4:
        raise ValueError("vector-bundle bound needs c1 >= 4")
    return Fraction(2 * c1**3 - 4 * c1**2 + 2, 3 * c1 - 4)


@dataclass(frozen=True)
class P3Decomposition:
    """Degree-graded pieces of the would-be Gotzmann representation."""

    p3_part: RationalPoly
    p2_terms: int
    linear_coeff: int
    constant_residual: Fraction

    @property
    def bound_ok(self) -> bool:
        return self.linear_coeff >= 0


def decompose_p3_rank2(P: RationalPoly) -> P3Decomposition:
    """Split off the forced cubic part and the c1+1 quadratic terms.

    p3_part is binom(d+3,3) + binom(d+2,3) always; the quadratic part is
    binom(d,2) + ... + binom(d-c1, 2); linear_coeff = c1^2 + 3 c1 + 2 - c2 is
    the number of linear terms a representation would need, so the bound
    holds iff it is nonnegative.  constant_residual = cbar - 1 - b with
    b = (c1^3 + 3 c1^2 + 2 c1)/6 is reported for completeness and carries no
    inequality of its own.
    """
    c = chern_from_hp(P)
    b = Fraction(c.c1**3 + 3 * c.c1**2 + 2 * c.c1, 6)
    return P3Decomposition(
        p3_part=binom_poly(3, 3) + binom_poly(2, 3),
        p2_terms=c.c1 + 1,
        linear_coeff=c.c1**2 + 3 * c.c1 + 2 - c.c2,
        constant_residual=P.coefficient(0) - 1 - b,
    )


@dataclass(frozen=True)
class C1Report:
    c1: Fraction
    ok: bool


def c1_nonneg_check(P: RationalPoly, r: int, n: int) -> C1Report:
    """Read c1 off the top two coefficients of a rank-r Hilbert polynomial on
    P^n and test c1 >= 0 (required for global generation).

    The top two terms are r d^n/n! + (r(n+1)/2 + c1) d^{n-1}/(n-1)!, so
    c1 = (coefficient of d^{n-1}) * (n-1)! - r(n+1)/2.  The value is reported
    even when negative; that is the useful diagnostic.
    """
    if r < 1 or n < 1:
        raise ValueError("need rank r >= 1 and ambient dimension n >= 1")
    if P.degree != n or P.leading_coefficient != Fraction(r, factorial(n)):
        raise WrongShape(
            f"rank-{r} on P^{n} needs degree {n} and leading coefficient {r}/{n}!"
        )
    c1 = P.coefficient(n - 1) * factorial(n - 1) - Fraction(r * (n + 1), 2)
    return C1Report(c1=c1, ok=c1 >= 0)
