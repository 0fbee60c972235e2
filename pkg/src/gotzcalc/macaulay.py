"""Macaulay representations of integers and the growth predicates built on them.

The d-th Macaulay representation of a >= 0 writes

    a = binom(k_d, d) + binom(k_{d-1}, d-1) + ... + binom(k_delta, delta)

with k_d > k_{d-1} > ... > k_delta >= delta > 0; it exists and is unique, and
the greedy algorithm (take the largest feasible top at each bottom) finds it.
The Macaulay transformation a^<d> bumps every top and bottom by one; it is the
sharp upper bound for one-step Hilbert function growth.

Binomials here are integer binomials: binom(x, y) = 0 for x < y and
binom(x, 0) = 1.  The polynomial convention lives in :mod:`gotzcalc.polys`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


def binom_int(x: int, y: int) -> int:
    """Integer binomial with binom(x, y) = 0 for x < y and binom(x, 0) = 1."""
    if y < 0 or x < y:
        return 0
    return comb(x, y)


@dataclass(frozen=True)
class MacaulayRep:
    """Tops [k(d), k(d-1), ..., k(delta)] paired with bottoms d, d-1, ..., delta."""

    index: int
    tops: tuple[int, ...]

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("Macaulay representations need index d >= 1")
        if len(self.tops) > self.index:
            raise ValueError("more tops than available bottoms d, d-1, ..., 1")
        for a, b in zip(self.tops, self.tops[1:]):
            if a <= b:
                raise ValueError("tops must be strictly decreasing")
        if self.tops and self.tops[-1] < self.bottoms[-1]:
            raise ValueError("last top must be >= its bottom")

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(range(self.index, self.index - len(self.tops), -1))

    def value(self) -> int:
        return sum(binom_int(k, j) for k, j in zip(self.tops, self.bottoms))

    def transform(self) -> int:
        """Value after bumping every top and bottom by one."""
        return sum(binom_int(k + 1, j + 1) for k, j in zip(self.tops, self.bottoms))


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Greedy d-th Macaulay representation of a >= 0; empty for a = 0."""
    if d < 1:
        raise ValueError("Macaulay representations need d >= 1")
    if a < 0:
        raise ValueError("Macaulay representations are for nonnegative integers")
    tops = []
    rem = a
    j = d
    while rem > 0:
        k = j  # binom(j, j) = 1 <= rem
        while binom_int(k + 1, j) <= rem:
            k += 1
        tops.append(k)
        rem -= binom_int(k, j)
        j -= 1
    rep = MacaulayRep(d, tuple(tops))
    assert rep.value() == a
    return rep


def macaulay_transform(a: int, d: int) -> int:
    """a^<d>: bump tops and bottoms of the d-th representation; 0^<d> = 0."""
    return macaulay_rep(a, d).transform()


def macaulay_growth_ok(h_d: int, h_next: int, d: int) -> bool:
    """Macaulay's growth bound: h_next <= h_d^<d>."""
    return h_next <= macaulay_transform(h_d, d)


def gasharov_bound_ok(
    values: Sequence[int], l: int, p: int, start: int = 0
) -> bool:
    """Check H(d+1) <= H(d)^<d-l-p> for every d >= p+l+1 in the given range.

    ``values[i]`` is H(start + i) on a contiguous degree range.  ``l`` is the
    maximal generator degree of the ambient free module (so l <= 0 for twists
    <= 0) and ``p >= 0`` is the slack parameter.  Raises ValueError when the
    range contains no checkable degree pair, so a vacuous pass is impossible.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    end = start + len(values) - 1
    lo = max(start, p + l + 1)
    if lo + 1 > end:
        raise ValueError("degree range too short: nothing to check")
    for d in range(lo, end):
        bound = macaulay_transform(values[d - start], d - l - p)
        if values[d + 1 - start] > bound:
            return False
    return True


def scheme_hf_criterion(values: Sequence[int]) -> bool:
    """H(0) = 1 together with H(d)^<d> <= H(d+1) for 1 <= d < D.

    This is the reversed orientation of the classical Macaulay growth bound
    (which is :func:`macaulay_growth_ok`); both predicates are provided and
    valid Hilbert functions of projective schemes can fail this one (e.g.
    H = 1, 2, 3, 3, ... of three collinear points fails at d = 2).
    """
    if len(values) < 2:
        raise ValueError("need values H(0..D) with D >= 1")
    if values[0] != 1:
        return False
    for d in range(1, len(values) - 1):
        if macaulay_transform(values[d], d) > values[d + 1]:
            return False
    return True
