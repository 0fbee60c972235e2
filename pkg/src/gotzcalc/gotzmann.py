"""Gotzmann representations of Hilbert polynomials and the regularity bound.

A Gotzmann representation of P is the expansion

    P(d) = binom(d + a_1, a_1) + binom(d + a_2 - 1, a_2) + ...
           + binom(d + a_s - (s-1), a_s)

with integers a_1 >= a_2 >= ... >= a_s >= 0 (binomials in the polynomial
convention of :mod:`gotzcalc.polys`).  When it exists it is unique, and it
exists exactly when P is the Hilbert polynomial of a projective scheme --
equivalently of a quotient of a free module with generator degrees <= 0.
The number of terms s is the Gotzmann number; it bounds the regularity of
the kernel sheaf of any globally generated quotient with Hilbert polynomial P.

The computation is a recursion on the backward difference: the difference of
term i with top a_i > 0 is term i with top a_i - 1, so the positive tops of P
are the tops of delta-P plus one, and the leftover constant counts the
trailing zero entries.  A negative or non-integer leftover means no
representation exists (that is a semantic answer, not a failure: P(d) = d,
the Hilbert polynomial of O(-1) on the projective line, is the standard
example).

Representations are stored as runs (value, multiplicity) because the
multiplicities explode with the degree -- the representation of
binom(d+n+1, n) for n around 10 has astronomically many equal entries.  A
run of count terms with equal top v starting at position p sums, by the
telescoping Pascal identity, to

    binom(d + v - p + 2, v + 1) - binom(d + v - p + 2 - count, v + 1),

so every operation here is linear in the number of runs, never in s.
"""
from __future__ import annotations

from itertools import groupby
from typing import Iterable, Iterator

from .errors import NoGotzmannRepresentation, NotIntegerValued
from .polys import BinomialTerm, RationalPoly, binom_poly

_MATERIALIZE_LIMIT = 10**6


class GotzmannRep:
    """Nonincreasing tops a_1 >= ... >= a_s >= 0, run-length encoded."""

    __slots__ = ("runs",)

    def __init__(self, entries: Iterable[int] = ()):
        runs = []
        for value, group in groupby(int(a) for a in entries):
            runs.append((value, sum(1 for _ in group)))
        object.__setattr__(self, "runs", self._validated(runs))

    def __setattr__(self, name, value):
        raise AttributeError("GotzmannRep is immutable")

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "GotzmannRep":
        rep = cls.__new__(cls)
        object.__setattr__(
            rep, "runs", cls._validated([(int(v), int(c)) for v, c in runs])
        )
        return rep

    @staticmethod
    def _validated(runs) -> tuple[tuple[int, int], ...]:
        for value, count in runs:
            if value < 0:
                raise ValueError("Gotzmann entries must be nonnegative")
            if count < 1:
                raise ValueError("run multiplicities must be positive")
        for (a, _), (b, _) in zip(runs, runs[1:]):
            if a <= b:
                raise ValueError("Gotzmann entries must be nonincreasing")
        return tuple(runs)

    @property
    def s(self) -> int:
        """The Gotzmann number: the number of terms."""
        return sum(c for _, c in self.runs)

    @property
    def entries(self) -> tuple[int, ...]:
        """The explicit entry tuple; refuses to materialize monsters."""
        if self.s > _MATERIALIZE_LIMIT:
            raise ValueError(f"representation with s = {self.s} is too large to expand")
        return tuple(v for v, c in self.runs for _ in range(c))

    def positive_part(self) -> tuple[int, ...]:
        positive = [(v, c) for v, c in self.runs if v > 0]
        if sum(c for _, c in positive) > _MATERIALIZE_LIMIT:
            raise ValueError("positive part too large to expand")
        return tuple(v for v, c in positive for _ in range(c))

    def zeros(self) -> int:
        """Number of trailing zero entries."""
        return sum(c for v, c in self.runs if v == 0)

    def terms(self) -> Iterator[BinomialTerm]:
        """The binomial terms binom(d + a_i - (i-1), a_i), term by term."""
        position = 1
        for value, count in self.runs:
            for _ in range(count):
                yield BinomialTerm(value - (position - 1), value)
                position += 1

    def __eq__(self, other):
        return isinstance(other, GotzmannRep) and self.runs == other.runs

    def __hash__(self):
        return hash(self.runs)

    def __repr__(self):
        if self.s <= 16:
            return f"GotzmannRep({list(self.entries)})"
        return f"GotzmannRep(runs={list(self.runs)})"


def _run_poly(value: int, count: int, position: int) -> RationalPoly:
    """Sum of ``count`` consecutive terms with top ``value`` starting at the
    1-based ``position``, via the telescoping Pascal identity."""
    m = value - position + 2
    return binom_poly(m, value + 1) - binom_poly(m - count, value + 1)


def rep_to_poly(rep: GotzmannRep) -> RationalPoly:
    """Sum of the representation's binomial polynomials; 0 for the empty rep."""
    acc = RationalPoly.zero()
    position = 1
    for value, count in rep.runs:
        acc = acc + _run_poly(value, count, position)
        position += count
    return acc


def _runs_of(P: RationalPoly) -> list[tuple[int, int]]:
    if P.is_zero():
        return []
    if P.degree == 0:
        c = P(0)
        if c.denominator != 1 or c < 0:
            raise NoGotzmannRepresentation(
                f"constant part {c} is not a nonnegative integer"
            )
        return [(0, int(c))]
    positive = [(v + 1, c) for v, c in _runs_of(P.difference())]
    partial = RationalPoly.zero()
    position = 1
    for value, count in positive:
        partial = partial + _run_poly(value, count, position)
        position += count
    remainder = P - partial
    if not (remainder.is_zero() or remainder.degree == 0):
        raise NoGotzmannRepresentation("difference recursion left a non-constant")
    z = remainder(0)
    if z.denominator != 1 or z < 0:
        raise NoGotzmannRepresentation(
            f"leftover constant {z} is not a nonnegative integer"
        )
    if z:
        positive.append((0, int(z)))
    return positive


def gotzmann_rep(P: RationalPoly) -> GotzmannRep:
    """The unique Gotzmann representation of P, when one exists.

    Raises NotIntegerValued if P is not integer valued, and
    NoGotzmannRepresentation if P is not the Hilbert polynomial of any
    projective scheme.
    """
    if not P.is_integer_valued():
        raise NotIntegerValued(f"{P!r} takes non-integer values")
    try:
        rep = GotzmannRep.from_runs(_runs_of(P))
    except ValueError as exc:  # monotonicity can only break on bad input
        raise NoGotzmannRepresentation(str(exc)) from None
    if rep_to_poly(rep) != P:
        raise NoGotzmannRepresentation("round-trip check failed")
    return rep


def gotzmann_number(P: RationalPoly) -> int:
    """Number of terms s of the Gotzmann representation of P."""
    return gotzmann_rep(P).s


def gotzmann_sum(P: RationalPoly, Q: RationalPoly) -> GotzmannRep:
    """Representation of P + Q; exists whenever both P and Q have one."""
    gotzmann_rep(P)
    gotzmann_rep(Q)
    return gotzmann_rep(P + Q)


def lemma3_rep(n: int) -> GotzmannRep:
    """Representation of binom(d + n + 1, n) via the identity

    binom(d+n+1, n) = 1 + binom(d+1, 1) + binom(d+2, 2) + ... + binom(d+n, n).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    poly = RationalPoly.constant(1)
    for i in range(1, n + 1):
        poly = poly + binom_poly(i, i)
    return gotzmann_rep(poly)


def gotzmann_hilbert_function(rep: GotzmannRep, d: int) -> int:
    """Hilbert function built from a representation: the first min(d+1, s)
    terms evaluated at d.  For d >= s - 1 this equals the full polynomial.

    This is the minimal Hilbert function of a projective scheme with the
    given Hilbert polynomial.
    """
    if d < 0:
        raise ValueError("degrees are nonnegative")
    remaining = d + 1
    total = 0
    position = 1
    for value, count in rep.runs:
        if remaining <= 0:
            break
        take = min(count, remaining)
        piece = _run_poly(value, take, position)(d)
        assert piece.denominator == 1
        total += int(piece)
        position += count
        remaining -= take
    return total


def regularity_bound(P: RationalPoly) -> int:
    """Gotzmann regularity bound for the kernel of a globally generated
    quotient with Hilbert polynomial P: the Gotzmann number s.

    The bound is valid but not sharp for sheaves (unlike the ideal case).
    """
    return gotzmann_number(P)


def regularity_bound_twisted(P: RationalPoly, a: int) -> int:
    """Regularity bound s + a for F, given the representation of F(a)."""
    if a < 0:
        raise ValueError("twist a must be nonnegative")
    return gotzmann_number(P) + a


__all__ = [
    "GotzmannRep",
    "rep_to_poly",
    "gotzmann_rep",
    "gotzmann_number",
    "gotzmann_sum",
    "lemma3_rep",
    "gotzmann_hilbert_function",
    "regularity_bound",
    "regularity_bound_twisted",
]
