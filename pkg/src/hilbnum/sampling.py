"""Random monomials and ideals for self-tests."""

from __future__ import annotations

import os
import random

from hilbnum.ideal import MonomialIdeal, minimalize
from hilbnum.monomial import Monomial

DEFAULT_SEED = 20240601


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    """``HILBNUM_SEED`` if set, else the fixed default."""
    text = os.environ.get("HILBNUM_SEED")
    return int(text) if text else default


def random_monomial(rng: random.Random, nvars: int, max_deg: int, min_deg: int = 1) -> Monomial:
    """Uniform total degree in [min_deg, max_deg], then a random walk over variables."""
    deg = rng.randint(min_deg, max_deg)
    exps = [0] * nvars
    for _ in range(deg):
        exps[rng.randrange(nvars)] += 1
    return Monomial.from_dense(exps)


def random_ideal(rng: random.Random, max_gens: int = 6, nvars: int = 5,
                 max_deg: int = 4) -> MonomialIdeal:
    count = rng.randint(1, max_gens)
    return minimalize(random_monomial(rng, nvars, max_deg) for _ in range(count))


def random_ideals(count: int, seed: int | None = None, **kwargs) -> list[MonomialIdeal]:
    rng = random.Random(seed_from_env() if seed is None else seed)
    return [random_ideal(rng, **kwargs) for _ in range(count)]
