import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ideals, monomials
from hilbnum import _pykernels, kernels
from hilbnum.engine import numerator_incl_excl, numerator_koszul, numerator_oracle
from hilbnum.errors import ArithmeticOverflow
from hilbnum.ideal import minimalize
from hilbnum.monomial import Monomial, parse_monomial
from hilbnum.series import GradedSeries

try:
    from hilbnum import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _dense(ideal, k, cap):
    coder = kernels.Coder(range(1, k + 1), cap)
    return coder, [coder.dense(g) for g in ideal.gens if g.tdeg <= cap]


@given(monomials(max_index=6, max_exp=4), st.integers(0, 12))
def test_coder_roundtrip(m, extra):
    cap = m.tdeg + extra
    coder = kernels.Coder(range(1, 7), cap)
    assert coder.decode(coder.encode(m)) == m
    assert Monomial.from_dense(coder.dense(m)) == m


def test_coder_sparse_indices():
    coder = kernels.Coder([9, 2, 40], 5)
    m = parse_monomial("x2*x40^3")
    assert coder.dense(m) == (1, 0, 3)
    assert coder.decode(coder.encode(m)) == m


@needs_c
@given(ideals(max_gens=6, max_index=4), st.integers(0, 9))
def test_incl_excl_parity(ideal, cap):
    _, gens = _dense(ideal, 4, cap)
    assert _ckernels.incl_excl(gens, 4, cap) == _pykernels.incl_excl(gens, 4, cap)


@needs_c
@given(ideals(max_index=4), st.integers(0, 7))
def test_staircase_parity(ideal, cap):
    _, gens = _dense(ideal, 4, cap)
    assert _ckernels.staircase(gens, 4, cap) == _pykernels.staircase(gens, 4, cap)


@needs_c
@given(ideals(max_index=3), st.integers(0, 6))
def test_koszul_parity(ideal, cap):
    _, gens = _dense(ideal, 3, cap)
    codes, _ = _pykernels.staircase([], 3, cap)
    assert _ckernels.koszul(gens, 3, cap, codes) == _pykernels.koszul(gens, 3, cap, codes)


@needs_c
@given(st.lists(st.tuples(monomials(max_index=3, max_exp=3), st.integers(-9, 9)), max_size=12),
       st.lists(st.tuples(monomials(max_index=3, max_exp=3), st.integers(-9, 9)), max_size=12))
def test_convolve_parity(a, b):
    cap = 9
    coder = kernels.Coder(range(1, 4), cap)

    def unpack(pairs):
        return ([coder.encode(m) for m, _ in pairs], [m.tdeg for m, _ in pairs],
                [c for _, c in pairs])

    args = unpack(a) + unpack(b) + (cap - 2,)
    assert _ckernels.convolve(*args) == _pykernels.convolve(*args)


def test_wide_problems_fall_back():
    # (cap+1)^k leaves int64 here, so only the pure kernels can run it
    ideal = minimalize(parse_monomial(f"x{i}*x{i + 1}") for i in range(1, 20))
    assert not kernels._codes_fit(20, 20)
    assert kernels._pick(20, 20) is _pykernels
    p = numerator_incl_excl(ideal, 3)
    assert p.coeffs[parse_monomial("x1*x2*x3")] == 1


def test_big_coefficients_fall_back():
    huge = 2**40
    coder = kernels.Coder([1], 2)
    x1 = coder.encode(parse_monomial("x1"))
    raw = kernels.convolve([x1], [1], [huge], [x1], [1], [huge], 1, 2)
    assert raw == {coder.encode(parse_monomial("x1^2")): huge * huge}
    a = GradedSeries(2, {parse_monomial("x1"): huge}, 1)
    with pytest.raises(ArithmeticOverflow):
        a * a


def test_forced_pure_backend():
    env = dict(os.environ, HILBNUM_PURE="1")
    code = ("import hilbnum, sys; from hilbnum.engine import numerator;"
            "from hilbnum.ideal import named_stream, realize_stream;"
            "p = numerator(realize_stream(named_stream('powers:2,3'), 5), 5);"
            "print(hilbnum.BACKEND, p)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out[0] == "python"
    assert " ".join(out[1:]) == "1 - x1^2 - x2^3 + x1^2*x2^3"


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None and os.environ.get("HILBNUM_PURE", "") in ("", "0"):
        assert kernels.BACKEND == "cython"


@needs_c
@given(ideals(max_index=5), st.integers(1, 5), st.integers(0, 8))
def test_routes_same_on_both_backends(ideal, n, cap):
    fast = [numerator_oracle(ideal, n, cap), numerator_koszul(ideal, n, cap),
            numerator_incl_excl(ideal, cap)]
    with pytest.MonkeyPatch.context() as mp:
        mp.setattr(kernels, "_ckernels", None)
        slow = [numerator_oracle(ideal, n, cap), numerator_koszul(ideal, n, cap),
                numerator_incl_excl(ideal, cap)]
    assert fast == slow
