import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import monomials, series
from hilbnum.errors import ArithmeticOverflow, CapExceeded
from hilbnum.monomial import ONE, Monomial, Partition, parse_monomial
from hilbnum.series import (
    CollapsedSeries,
    GradedSeries,
    coefficient_at,
    collapse,
    dirichlet_convolve,
    mu,
    multiply,
    nu,
    primes,
    to_dirichlet,
)

P = parse_monomial


def S(text, cap, nvars=None):
    return GradedSeries.parse(text, cap, nvars)


def test_coefficient_at():
    f = S("1 - x1", 3)
    assert coefficient_at(f, P("x1")) == -1
    assert f[P("x2^3")] == 0
    with pytest.raises(CapExceeded):
        f.coefficient_at(P("x1^4"))
    everything = nu(3, 4)
    assert all(everything[m] == 1 for m in everything.coeffs)


def test_add_examples():
    f = S("1 - x1 + 3*x2^2", 4)
    assert f + GradedSeries.zero(4) == f
    assert (f + (-f)).is_zero()
    assert S("1 - x1", 2) + S("x1", 2) == GradedSeries.one(2)


def test_multiply_examples():
    assert S("1 - x1", 2) * S("1 + x1 + x1^2", 2) == GradedSeries.one(2)
    f = S("2 - x1*x2 + x3^2", 5)
    assert f * GradedSeries.one(5) == f
    assert nu(2, 4) * mu(2, 4) == GradedSeries.one(4)


def test_nu_mu():
    assert nu(1, 3) == S("1 + x1 + x1^2 + x1^3", 3)
    assert nu(2, 1) == S("1 + x1 + x2", 1)
    assert mu(2, 2) == S("1 - x1 - x2 + x1*x2", 2)
    assert mu(3, 1) == S("1 - x1 - x2 - x3", 1)
    for n in range(1, 5):
        for cap in range(6):
            assert len(nu(n, cap).coeffs) == comb(n + cap, n)


@pytest.mark.parametrize("n, cap", [(n, c) for n in range(1, 5) for c in range(9)])
def test_nu_mu_inverse(n, cap):
    assert multiply(nu(n, cap), mu(n, cap)) == GradedSeries.one(cap)


def test_collapse_examples():
    total = Partition.total()
    assert str(collapse(S("1 - x1*x2", 4), total)) == "1 - t^2"
    assert collapse(S("x1 - x2", 4), total).coeffs == {}
    y = Partition(2, {1: 1, 2: 2})
    c = collapse(S("1 - x1 - x2 + x1*x2", 4), y)
    assert str(c) == "1 - t1 - t2 + t1*t2"


def test_dirichlet_examples():
    assert to_dirichlet(S("1 - x1 - x2 + x1*x2", 3, 2)) == {1: 1, 2: -1, 3: -1, 6: 1}
    assert to_dirichlet(GradedSeries.one(3, 1)) == {1: 1}
    assert primes(6) == [2, 3, 5, 7, 11, 13]
    with pytest.raises(ValueError):
        to_dirichlet(GradedSeries.one(3))


def test_dirichlet_key_overflow():
    f = GradedSeries(70, {Monomial.var(1, 64): 1}, 1)
    with pytest.raises(ArithmeticOverflow):
        to_dirichlet(f)


def test_coefficient_overflow():
    big = GradedSeries(2, {ONE: 2**62}, 1)
    with pytest.raises(ArithmeticOverflow):
        big + big
    with pytest.raises(ArithmeticOverflow):
        big * GradedSeries(2, {ONE: 4}, 1)


def test_cap_truncates_on_construction():
    f = GradedSeries(1, {P("x1^2"): 5, P("x1"): 2})
    assert f.coeffs == {P("x1"): 2}
    with pytest.raises(CapExceeded):
        f.truncate(2)


def test_text_rendering():
    f = S("x2 - 2*x1*x2 + 1 + x1", 3)
    assert str(f) == "1 + x1 + x2 - 2*x1*x2"
    assert str(GradedSeries.zero(2)) == "0"
    assert str(S("-x1", 2)) == "-x1"
    assert str(CollapsedSeries.from_univariate([1, 0, -1, -1, 0, 1])) == "1 - t^2 - t^3 + t^5"


def test_json_format():
    f = S("1 - x1^2*x3 + 2*x2", 4)
    data = json.loads(f.to_json())
    assert data == {"cap": 4, "terms": [{"monomial": "1", "coeff": 1},
                                        {"monomial": "x1^2*x3", "coeff": -1},
                                        {"monomial": "x2", "coeff": 2}]}
    c = CollapsedSeries(2, 3, {(0, 0): 1, (1, 1): -2})
    assert json.loads(c.to_json()) == {"r": 2, "cap": 3, "terms": [
        {"deg": [0, 0], "coeff": 1}, {"deg": [1, 1], "coeff": -2}]}


@given(series())
def test_json_roundtrip(f):
    assert GradedSeries.from_json(f.to_json()) == f


@given(series(), st.integers(1, 2))
def test_collapsed_json_roundtrip(f, r):
    c = collapse(f, Partition(r, {1: r}))
    assert CollapsedSeries.from_json(c.to_json()) == c


@given(series(), series(), series())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@given(series(cap=5), series(cap=5), st.integers(1, 2))
def test_collapse_is_ring_map(f, g, r):
    y = Partition(r, {2: r})
    assert collapse(f * g, y) == collapse(f, y) * collapse(g, y)
    assert collapse(f + g, y) == collapse(f, y) + collapse(g, y)


@given(series(cap=3), series(cap=3))
def test_dirichlet_isomorphism(f, g):
    df, dg, dfg = to_dirichlet(f), to_dirichlet(g), to_dirichlet(f * g)
    keys = set(dfg) | {a * b for a in df for b in dg}
    for k in keys:
        term = Monomial.from_dict(_factor(k))
        if term.tdeg <= 3:
            assert dfg.get(k, 0) == dirichlet_convolve(df, dg, k)


def _factor(k):
    out = {}
    for i, p in enumerate(primes(3), start=1):
        while k % p == 0:
            out[i] = out.get(i, 0) + 1
            k //= p
    assert k == 1
    return out


@given(series(cap=6), series(cap=6), st.integers(0, 6))
def test_truncation_soundness(f, g, d):
    assert f.truncate(d) * g.truncate(d) == (f * g).truncate(d)


@given(monomials(max_index=3), st.integers(0, 5))
def test_nu_coefficients(m, cap):
    if m.tdeg <= cap:
        assert nu(3, cap)[m] == 1
    else:
        assert m not in nu(3, cap).coeffs
