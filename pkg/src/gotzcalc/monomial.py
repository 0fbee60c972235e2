"""Monomial ideals and monomial submodules of twisted free modules.

Conventions.  The polynomial ring is S = k[x0, ..., xn] (nvars = n + 1
variables); monomials are exponent tuples of length nvars.  The monomial
order is lexicographic with x0 > x1 > ... > xn, which is plain tuple
comparison on exponent vectors.  A twisted free module

    F = S e_1 + ... + S e_r,  deg(e_j) = f_j,  f_1 <= ... <= f_r <= 0

carries a monomial submodule N = I_1 e_1 + ... + I_r e_r given componentwise
by monomial ideals; the objects of interest are the quotients M = F / N and
their Hilbert data.

Two independent Hilbert engines are provided: direct enumeration of standard
monomials degree by degree, and the inclusion-exclusion numerator of the
Hilbert series.  Lexification replaces each component by the lexsegment ideal
with the same Hilbert function; combined with saturation and the
Eliahou-Kervaire degree of a strongly stable ideal it yields a computable
regularity certificate that can be compared against the Gotzmann number.

The Eliahou-Kervaire formula (regularity of a strongly stable ideal = maximal
generator degree) is used here as a combinatorial definition; it is applied
only to lexsegment-type ideals, where it is standard, though as stated it is
a characteristic-zero fact.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InconsistencyError, NotStronglyStable
from .gotzmann import gotzmann_number
from .macaulay import macaulay_transform
from .polys import RationalPoly, binom_poly, interpolate


class Monomial:
    """A monomial as an exponent tuple; degree is the sum of exponents."""

    __slots__ = ("exponents",)

    def __init__(self, exponents):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def times_var(self, i: int) -> "Monomial":
        exps = list(self.exponents)
        exps[i] += 1
        return Monomial(exps)

    def colon_var(self, i: int) -> "Monomial":
        """self / x_i when divisible, otherwise self unchanged."""
        if self.exponents[i] == 0:
            return self
        exps = list(self.exponents)
        exps[i] -= 1
        return Monomial(exps)

    def exchange(self, j: int, i: int) -> "Monomial":
        """x_i * self / x_j (the strongly stable exchange move, i < j)."""
        exps = list(self.exponents)
        if exps[j] == 0:
            raise ValueError("monomial not divisible by the exchanged variable")
        exps[j] -= 1
        exps[i] += 1
        return Monomial(exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "Monomial":
        """Parse "x0^2 x1" style text; "1" is the unit monomial."""
        text = text.strip()
        exps = [0] * nvars
        if text in ("", "1"):
            return cls(exps)
        for token in text.split():
            base, _, power = token.partition("^")
            if not base.startswith("x"):
                raise ValueError(f"bad monomial token {token!r}")
            try:
                idx = int(base[1:])
                e = int(power) if power else 1
            except ValueError:
                raise ValueError(f"bad monomial token {token!r}") from None
            if not 0 <= idx < nvars:
                raise ValueError(f"variable x{idx} out of range for {nvars} variables")
            if e < 1:
                raise ValueError(f"bad exponent in {token!r}")
            exps[idx] += e
        return cls(exps)

    def to_text(self) -> str:
        parts = [
            f"x{i}^{e}" if e > 1 else f"x{i}"
            for i, e in enumerate(self.exponents)
            if e > 0
        ]
        return " ".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self.to_text()!r})"


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in nvars variables, lex-descending (x0 largest)."""
    if d < 0:
        return ()

    def build(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in build(remaining - first, slots - 1):
                yield (first,) + rest

    return tuple(Monomial(e) for e in build(d, nvars))


class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, gens=()):
        if nvars < 1:
            raise ValueError("need at least one variable")
        gens = [g if isinstance(g, Monomial) else Monomial(g) for g in gens]
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator has the wrong number of variables")
        minimal: list[Monomial] = []
        for g in sorted(gens, key=lambda m: m.degree):
            if not any(h.divides(g) for h in minimal):
                minimal.append(g)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", frozenset(minimal))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "MonomialIdeal":
        """Parse comma-separated generators, e.g. "x0^2 x1, x1^3"; "" is (0)."""
        text = text.strip()
        if not text or text == "0":
            return cls(nvars)
        return cls(nvars, (Monomial.from_text(part, nvars) for part in text.split(",")))

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return ", ".join(m.to_text() for m in self.sorted_gens())

    def sorted_gens(self) -> list[Monomial]:
        return sorted(self.gens, key=lambda m: (m.degree, tuple(-e for e in m.exponents)))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def max_gen_degree(self) -> int:
        """Maximal degree of a minimal generator; 0 for the zero ideal."""
        return max((g.degree for g in self.gens), default=0)

    def slice(self, d: int) -> frozenset[Monomial]:
        """The degree-d monomials lying in the ideal."""
        return _ideal_slice(self, d)

    def slice_count(self, d: int) -> int:
        return len(self.slice(d))

    def quotient_dim(self, d: int) -> int:
        """dim_k (S/I)_d: standard monomials of degree d."""
        if d < 0:
            return 0
        return comb(d + self.nvars - 1, self.nvars - 1) - self.slice_count(d)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.nvars}, ({self.to_text()}))"


@lru_cache(maxsize=200_000)
def _ideal_slice(ideal: MonomialIdeal, d: int) -> frozenset[Monomial]:
    # Degree-d multiples of the generators = shadow of the previous slice
    # plus the degree-d generators; linear in the slice sizes.
    if d < 0 or not ideal.gens:
        return frozenset()
    out = {
        u.times_var(i)
        for u in _ideal_slice(ideal, d - 1)
        for i in range(ideal.nvars)
    }
    out.update(g for g in ideal.gens if g.degree == d)
    return frozenset(out)


@dataclass(frozen=True)
class Component:
    """One summand S e_j with generator degree ``twist`` <= 0 and ideal I_j."""

    twist: int
    ideal: MonomialIdeal


class MonomialModule:
    """N = I_1 e_1 + ... + I_r e_r inside F = S e_1 + ... + S e_r.

    Components are normalized to ascending twist order f_1 <= ... <= f_r <= 0.
    All Hilbert data refers to the quotient M = F / N.
    """

    __slots__ = ("components",)

    def __init__(self, components):
        comps = []
        for item in components:
            comp = item if isinstance(item, Component) else Component(*item)
            if comp.twist > 0:
                raise ValueError("generator degrees (twists) must be <= 0")
            comps.append(comp)
        if not comps:
            raise ValueError("a module needs at least one component")
        nvars = comps[0].ideal.nvars
        if any(c.ideal.nvars != nvars for c in comps):
            raise ValueError("components must share the variable count")
        comps.sort(key=lambda c: c.twist)
        object.__setattr__(self, "components", tuple(comps))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialModule is immutable")

    @property
    def nvars(self) -> int:
        return self.components[0].ideal.nvars

    @property
    def rank(self) -> int:
        return len(self.components)

    def max_twist(self) -> int:
        return max(c.twist for c in self.components)

    def min_twist(self) -> int:
        return min(c.twist for c in self.components)

    def max_gen_degree(self) -> int:
        """Maximal F-degree (monomial degree + twist) of a submodule generator."""
        return max(
            (g.degree + c.twist for c in self.components for g in c.ideal.gens),
            default=0,
        )

    def to_dict(self) -> dict:
        return {
            "vars": self.nvars,
            "components": [
                {
                    "twist": c.twist,
                    "gens": [g.to_text() for g in c.ideal.sorted_gens()],
                }
                for c in self.components
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "MonomialModule":
        try:
            nvars = int(doc["vars"])
            raw = doc["components"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad module document: {exc}") from None
        comps = []
        for entry in raw:
            ideal = MonomialIdeal(
                nvars, (Monomial.from_text(t, nvars) for t in entry.get("gens", []))
            )
            comps.append(Component(int(entry.get("twist", 0)), ideal))
        return cls(comps)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialModule) and self.components == other.components
        )

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"MonomialModule({self.to_dict()!r})"


def hf_enumerate(mod: MonomialModule, d: int) -> int:
    """Hilbert function H(M, d) of the quotient, by direct monomial counting."""
    return sum(c.ideal.quotient_dim(d - c.twist) for c in mod.components)


def hilbert_series_numerator(ideal: MonomialIdeal, max_gens: int = 20) -> list[int]:
    """Numerator Q(t) with H(S/I, d) = [t^d] Q(t) / (1-t)^nvars.

    Inclusion-exclusion over generator subsets (the Taylor complex Euler
    characteristic): Q(t) = sum over T of (-1)^|T| t^deg(lcm T), so the cost
    is 2^|gens|; refuses more than ``max_gens`` generators.
    """
    gens = list(ideal.gens)
    if len(gens) > max_gens:
        raise ValueError(
            f"{len(gens)} generators exceed the inclusion-exclusion bound {max_gens}"
        )
    coeffs: dict[int, int] = {0: 1}
    # iterative subset walk: states are (lcm, sign) pairs folded one gen at a time
    stack = [(Monomial((0,) * ideal.nvars), 1, 0)]
    while stack:
        lcm, sign, start = stack.pop()
        for idx in range(start, len(gens)):
            bigger = lcm.lcm(gens[idx])
            deg = bigger.degree
            coeffs[deg] = coeffs.get(deg, 0) - sign * 1
            stack.append((bigger, -sign, idx + 1))
    top = max((e for e, c in coeffs.items() if c), default=-1)
    return [coeffs.get(e, 0) for e in range(top + 1)]


def series_hf(ideal: MonomialIdeal, d: int, numerator: list[int] | None = None) -> int:
    """H(S/I, d) read off the Hilbert series expansion (independent of
    :func:`hf_enumerate`)."""
    if d < 0:
        return 0
    q = hilbert_series_numerator(ideal) if numerator is None else numerator
    n = ideal.nvars - 1
    total = 0
    for e, coeff in enumerate(q):
        if coeff and d - e >= 0:
            total += coeff * comb(d - e + n, n)
    return total


def hilbert_polynomial(mod: MonomialModule) -> RationalPoly:
    """Exact Hilbert polynomial of the quotient M = F / N via the series.

    Each component numerator coefficient q_e at t^e contributes
    q_e * binom(d - f_j - e + n, n) in the polynomial convention; the result
    agrees with hf_enumerate for all d >= max(e + f_j) - n.
    """
    n = mod.nvars - 1
    acc = RationalPoly.zero()
    for c in mod.components:
        for e, coeff in enumerate(hilbert_series_numerator(c.ideal)):
            if coeff:
                acc = acc + coeff * binom_poly(n - e - c.twist, n)
    return acc


def hilbert_polynomial_by_interpolation(mod: MonomialModule) -> RationalPoly:
    """Independent cross-check: interpolate hf_enumerate on a window past the
    stabilization bound, require two consecutive base degrees to give the
    same interpolant, and validate on three extra points."""
    n = mod.nvars - 1
    base = mod.max_gen_degree() + max(-c.twist for c in mod.components) + n + 1
    window = n + 2
    first = interpolated = None
    for shift in (0, 1):
        pts = [
            (d, hf_enumerate(mod, d))
            for d in range(base + shift, base + shift + window)
        ]
        interpolated = interpolate(pts)
        if shift == 0:
            first = interpolated
    if first != interpolated:
        raise InconsistencyError("Hilbert function did not stabilize on the window")
    for d in range(base + window + 1, base + window + 4):
        if interpolated(d) != hf_enumerate(mod, d):
            raise InconsistencyError("interpolated Hilbert polynomial failed validation")
    return interpolated


def colon_by_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """I : x_i, generated by g / x_i when x_i | g and by g otherwise."""
    if not 0 <= i < ideal.nvars:
        raise ValueError("variable index out of range")
    return MonomialIdeal(ideal.nvars, (g.colon_var(i) for g in ideal.gens))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by the pairwise lcms."""
    if a.nvars != b.nvars:
        raise ValueError("ideals live in different rings")
    return MonomialIdeal(a.nvars, (g.lcm(h) for g in a.gens for h in b.gens))


def saturate(ideal: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity for m = (x0, ..., xn), by iterating the intersection of
    the variable colons to a fixpoint; removes the finite-length part."""
    current = ideal
    while True:
        step = colon_by_variable(current, 0)
        for i in range(1, current.nvars):
            step = intersect(step, colon_by_variable(current, i))
        if step == current:
            return current
        current = step


def _lex_first(nvars: int, d: int, count: int) -> tuple[Monomial, ...]:
    everything = monomials_of_degree(nvars, d)
    if count > len(everything):
        raise InconsistencyError("lexsegment larger than the degree slice")
    return everything[:count]


def lexify_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The lexsegment ideal with the same Hilbert function.

    Built degree by degree: in degree d take the |I_d| lex-largest monomials.
    Construction runs to the maximal generator degree + 1 and certifies the
    cutoff by checking that the shadow of the last slice fills the next slice
    exactly (persistence then rules out later generators); otherwise the
    bound is raised and the scan continues.
    """
    if ideal.is_zero():
        return ideal
    nvars = ideal.nvars
    bound = ideal.max_gen_degree() + 1
    gens: list[Monomial] = []
    prev: set[Monomial] = set()
    d = 0
    while True:
        while d <= bound:
            target = ideal.slice_count(d)
            current = set(_lex_first(nvars, d, target))
            shadow = {u.times_var(i) for u in prev for i in range(nvars)}
            if not shadow <= current:
                raise InconsistencyError("lexsegment slices do not form an ideal")
            gens.extend(current - shadow)
            prev = current
            d += 1
        shadow = {u.times_var(i) for u in prev for i in range(nvars)}
        if len(shadow) == ideal.slice_count(d):
            break
        bound += 1
    return MonomialIdeal(nvars, gens)


def lexify(mod: MonomialModule) -> MonomialModule:
    """Componentwise lexification; preserves the total Hilbert function."""
    return MonomialModule(
        Component(c.twist, lexify_ideal(c.ideal)) for c in mod.components
    )


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """Closure under the exchanges x_i * g / x_j for i < j, x_j | g."""
    for g in ideal.gens:
        for j, e in enumerate(g.exponents):
            if e == 0:
                continue
            for i in range(j):
                if not ideal.contains(g.exchange(j, i)):
                    return False
    return True


def stable_regularity(ideal: MonomialIdeal) -> int:
    """Eliahou-Kervaire regularity of a strongly stable ideal: the maximal
    generator degree (0 for the zero ideal)."""
    if not is_strongly_stable(ideal):
        raise NotStronglyStable(ideal.to_text())
    return ideal.max_gen_degree()


@dataclass(frozen=True)
class RegularityReport:
    s: int
    reg_proxy: int
    ok: bool
    component_regs: tuple[int, ...]


def check_gotzmann_regularity(mod: MonomialModule) -> RegularityReport:
    """Experimental check of the Gotzmann regularity bound.

    Computes s = Gotzmann number of the quotient's Hilbert polynomial, then
    the Eliahou-Kervaire degree of each saturated lexified component as a
    regularity certificate, and reports whether the certificate stays <= s.
    """
    s = gotzmann_number(hilbert_polynomial(mod))
    regs = tuple(
        stable_regularity(saturate(lexify_ideal(c.ideal))) for c in mod.components
    )
    proxy = max(regs, default=0)
    return RegularityReport(s=s, reg_proxy=proxy, ok=proxy <= s, component_regs=regs)


@dataclass(frozen=True)
class PersistenceReport:
    degree: int
    transform_index: int
    at_bound: bool
    persists: bool | None


def check_persistence(mod: MonomialModule, d: int, l: int, p: int) -> PersistenceReport:
    """One persistence step for module Hilbert functions.

    Requires the submodule generated in F-degrees <= d and d >= p + l + 1.
    Reports whether H(d+1) = H(d)^<d-l-p>; when it does, verifies that
    H(d+2) = H(d+1)^<d+1-l-p> and raises InconsistencyError on a
    counterexample (none is possible for actual monomial modules).
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if d < p + l + 1:
        raise ValueError("persistence needs d >= p + l + 1")
    if mod.max_gen_degree() > d:
        raise ValueError("submodule has generators above the test degree")
    idx = d - l - p
    h0, h1, h2 = (hf_enumerate(mod, e) for e in (d, d + 1, d + 2))
    at_bound = h1 == macaulay_transform(h0, idx)
    if not at_bound:
        return PersistenceReport(d, idx, False, None)
    persists = h2 == macaulay_transform(h1, idx + 1)
    if not persists:
        raise InconsistencyError(
            f"growth met the Macaulay bound at degree {d} but not at {d + 1}"
        )
    return PersistenceReport(d, idx, True, True)
