"""Shared corpus generators for the randomized suites.

Everything is seeded so the suite is deterministic run to run.
"""
from __future__ import annotations

import random

from gotzcalc import Component, GotzmannRep, Monomial, MonomialIdeal, MonomialModule


def random_monomial(rng: random.Random, nvars: int, degree: int) -> Monomial:
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return Monomial(exps)


def random_ideal(
    rng: random.Random, nvars: int, max_gens: int = 6, max_deg: int = 5
) -> MonomialIdeal:
    count = rng.randint(0, max_gens)
    gens = [
        random_monomial(rng, nvars, rng.randint(1, max_deg)) for _ in range(count)
    ]
    return MonomialIdeal(nvars, gens)


def random_module(
    rng: random.Random,
    max_nvars: int = 4,
    max_rank: int = 3,
    twists=(0, -1, -2),
    max_gens: int = 6,
    max_deg: int = 5,
) -> MonomialModule:
    nvars = rng.randint(2, max_nvars)
    rank = rng.randint(1, max_rank)
    return MonomialModule(
        Component(rng.choice(twists), random_ideal(rng, nvars, max_gens, max_deg))
        for _ in range(rank)
    )


def module_corpus(seed: int, count: int, **kwargs) -> list[MonomialModule]:
    rng = random.Random(seed)
    return [random_module(rng, **kwargs) for _ in range(count)]


def random_gotzmann_entries(
    rng: random.Random, max_len: int = 12, max_entry: int = 6
) -> tuple[int, ...]:
    length = rng.randint(1, max_len)
    entries = sorted(
        (rng.randint(0, max_entry) for _ in range(length)), reverse=True
    )
    return tuple(entries)


def rep_corpus(seed: int, count: int, **kwargs) -> list[GotzmannRep]:
    rng = random.Random(seed)
    return [GotzmannRep(random_gotzmann_entries(rng, **kwargs)) for _ in range(count)]
