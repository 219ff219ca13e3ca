import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hilbnum.ideal import minimalize
from hilbnum.monomial import Monomial
from hilbnum.series import GradedSeries

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def monomials(max_index=4, max_exp=3, max_vars=3):
    pairs = st.dictionaries(st.integers(1, max_index), st.integers(1, max_exp),
                            max_size=max_vars)
    return pairs.map(Monomial.from_dict)


def ideals(max_gens=5, max_index=4, max_exp=3):
    nonunit = monomials(max_index, max_exp).filter(lambda m: not m.is_one())
    return st.lists(nonunit, max_size=max_gens).map(minimalize)


def series(cap=4, max_index=3, max_terms=5):
    terms = st.dictionaries(monomials(max_index, 2), st.integers(-5, 5), max_size=max_terms)
    return terms.map(lambda d: GradedSeries(cap, d, max_index))


@pytest.fixture
def rng():
    return random.Random(12345)
