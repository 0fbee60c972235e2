"""Numerical data of the Grassmannian model of the Quot scheme.

For quotients of O^r on P^n with Hilbert polynomial P and Gotzmann number s,
the parameter space embeds in Gr(S^r_s, P(s)) -- the Grassmannian of
P(s)-codimensional subspaces of the degree-s graded piece -- cut out by the
multiplication condition into the next graded piece.  This module computes
the embedding dimensions and, on the projective line, the full dimension
bookkeeping: the closed-form Gotzmann number for P(d) = k(d+1) + m, the
Porteous codimension of the degeneracy locus, the expected dimension
(r-k)k + rm, and the Hom/Aut dimension count over splitting types, whose
minimization lemma makes the expected dimension exact.

Note the closed form s = k(k+1)/2 + m is driven by the quotient's rank k
(the parameters of its Hilbert polynomial), not by the rank r of the ambient
free sheaf; the general representation algorithm confirms this.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Mapping

from .errors import InconsistencyError, InfeasibleEmbedding
from .gotzmann import gotzmann_number
from .polys import RationalPoly


@dataclass(frozen=True)
class QuotEmbedding:
    """Grassmannian embedding data at one degree level (default: level = s)."""

    s: int
    level: int
    ambient_dim: int
    codim: int
    next_ambient_dim: int
    next_codim: int


def quot_embedding(
    P: RationalPoly, n: int, r: int, level: int | None = None
) -> QuotEmbedding:
    """Embedding data for quotients of O^r on P^n with Hilbert polynomial P.

    At degree level l this is the pair Gr(r*binom(l+n, n), P(l)) and the
    analogous data one degree up.  Raises InfeasibleEmbedding when P(l) is
    negative or exceeds the ambient dimension (no such quotient of O^r).
    """
    if n < 1 or r < 1:
        raise ValueError("need ambient dimension n >= 1 and rank r >= 1")
    s = gotzmann_number(P)
    lv = s if level is None else level
    if lv < 0:
        raise ValueError("level must be nonnegative")
    data = []
    for degree in (lv, lv + 1):
        dim = r * comb(degree + n, n)
        value = P(degree)
        assert value.denominator == 1
        codim = int(value)
        if not 0 <= codim <= dim:
            raise InfeasibleEmbedding(
                f"P({degree}) = {codim} outside [0, {dim}] = [0, dim S^r_{degree}]"
            )
        data.append((dim, codim))
    return QuotEmbedding(s, lv, data[0][0], data[0][1], data[1][0], data[1][1])


def gotzmann_number_p1(k: int, m: int) -> int:
    """Gotzmann number k(k+1)/2 + m of P(d) = k(d+1) + m on the projective line."""
    if k < 1:
        raise ValueError("quotient rank k must be positive")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return k * (k + 1) // 2 + m


def porteous_codim(r: int, k: int, m: int, l: int) -> int:
    """Expected codimension [(r-k)l - m][k(l+2) + m] of the degeneracy locus
    at regularity level l."""
    _check_rkm(r, k, m)
    if l < 0:
        raise ValueError("l must be nonnegative")
    return ((r - k) * l - m) * (k * (l + 2) + m)


def expected_dim(r: int, k: int, m: int) -> int:
    """Expected dimension (r-k)k + rm of the Quot scheme on the line.

    Self-checks the defining identity
    [(r-k)(l+1) - m][k(l+1) + m] - porteous_codim = (r-k)k + rm for l = 0..10.
    """
    _check_rkm(r, k, m)
    value = (r - k) * k + r * m
    for l in range(11):
        gr_dim = ((r - k) * (l + 1) - m) * (k * (l + 1) + m)
        if gr_dim - porteous_codim(r, k, m, l) != value:
            raise InconsistencyError("Porteous dimension identity failed")
    return value


def _check_rkm(r: int, k: int, m: int):
    if not 1 <= k < r:
        raise ValueError("need 1 <= k < r")
    if m < 0:
        raise ValueError("m must be nonnegative")


@dataclass(frozen=True)
class SplittingType:
    """Kernel splitting type K = O(-t_1) + ... + O(-t_{r-k}), t_i >= 0."""

    twists: tuple[int, ...]

    def __post_init__(self):
        if any(t < 0 for t in self.twists):
            raise ValueError("splitting twists must be nonnegative")
        object.__setattr__(self, "twists", tuple(sorted(self.twists)))

    @property
    def summands(self) -> int:
        return len(self.twists)

    @property
    def total(self) -> int:
        return sum(self.twists)

    def exponent_form(self) -> dict[int, int]:
        """e_i = multiplicity of the twist t = i (the summand O(-i))."""
        form: dict[int, int] = {}
        for t in self.twists:
            form[t] = form.get(t, 0) + 1
        return form


def aut_dim(e: Mapping[int, int]) -> int:
    """dim Aut of the bundle with exponent form e:
    sum over i <= j of (j - i + 1) e_i e_j, since
    dim Hom(O(-j), O(-i)) = j - i + 1 on the line."""
    if any(i < 0 or c < 0 for i, c in e.items()):
        raise ValueError("exponent form needs nonnegative twists and counts")
    support = sorted(i for i, c in e.items() if c)
    return sum(
        (j - i + 1) * e[i] * e[j]
        for a, i in enumerate(support)
        for j in support[a:]
    )


def hom_mod_aut_dim(st: SplittingType, r: int) -> int:
    """dim Hom(K, O^r) - dim Aut(K) = r * sum(t_i + 1) - aut_dim.

    At most (r-k)k + rm, with equality exactly at the balanced type."""
    if r < 1:
        raise ValueError("rank must be positive")
    hom = r * sum(t + 1 for t in st.twists)
    return hom - aut_dim(st.exponent_form())


@dataclass(frozen=True)
class MinAutDim:
    minimum: int
    argmin: dict[int, int]
    unique: bool


def _exponent_forms(m_count: int, n_sum: int):
    """All exponent forms with sum(e_i) = m_count and sum(i e_i) = n_sum,
    i.e. partitions of n_sum into exactly m_count nonnegative parts."""

    def parts(total: int, count: int, cap: int):
        if count == 0:
            if total == 0:
                yield ()
            return
        for first in range(min(total, cap), -1, -1):
            if first * count < total:
                break
            for rest in parts(total - first, count - 1, first):
                yield (first,) + rest

    for tup in parts(n_sum, m_count, n_sum):
        yield SplittingType(tup).exponent_form()


def min_aut_dim(m_count: int, n_sum: int) -> MinAutDim:
    """Minimize aut_dim over exponent forms with sum e_i = m_count and
    sum i*e_i = n_sum.

    The minimum is m_count^2, achieved uniquely at the balanced type from the
    division algorithm: n_sum = q*m_count + rest gives e_q = m_count - rest,
    e_{q+1} = rest.  A brute-force enumeration cross-checks the closed form
    unless GOTZCALC_SKIP_ORACLE is set.
    """
    if m_count < 1:
        raise ValueError("need at least one summand")
    if n_sum < 0:
        raise ValueError("twist sum must be nonnegative")
    q, rest = divmod(n_sum, m_count)
    argmin = {q: m_count - rest}
    if rest:
        argmin[q + 1] = rest
    minimum = m_count * m_count
    if aut_dim(argmin) != minimum:
        raise InconsistencyError("closed-form minimizer does not reach m^2")
    if not os.environ.get("GOTZCALC_SKIP_ORACLE"):
        best, best_forms = None, []
        for form in _exponent_forms(m_count, n_sum):
            value = aut_dim(form)
            if best is None or value < best:
                best, best_forms = value, [form]
            elif value == best:
                best_forms.append(form)
        if best != minimum or best_forms != [argmin]:
            raise InconsistencyError(
                f"brute force disagrees with the closed form at ({m_count}, {n_sum})"
            )
    return MinAutDim(minimum=minimum, argmin=argmin, unique=True)
