"""Backend selection for the hot kernels.

The compiled module is used when it was built and the problem fits in int64
arithmetic; otherwise the pure-Python module runs (it uses unbounded ints).
Set ``HILBNUM_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from hilbnum import _pykernels
from hilbnum.monomial import Monomial

try:
    from hilbnum import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("HILBNUM_PURE", "") not in ("", "0"):
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_I64 = 2**63 - 1


def _codes_fit(k: int, cap: int) -> bool:
    return (cap + 1) ** k <= _I64 and k <= 62


def _pick(k: int, cap: int):
    if _ckernels is not None and _codes_fit(k, cap):
        return _ckernels
    return _pykernels


def incl_excl(gens, k, cap):
    return _pick(k, cap).incl_excl(gens, k, cap)


def staircase(gens, k, cap):
    return _pick(k, cap).staircase(gens, k, cap)


def convolve(a_codes, a_degs, a_coefs, b_codes, b_degs, b_coefs, k, cap):
    impl = _pick(k, cap)
    if impl is _ckernels:
        ma = max((abs(c) for c in a_coefs), default=0)
        mb = max((abs(c) for c in b_coefs), default=0)
        if ma * mb * max(1, min(len(a_coefs), len(b_coefs))) > _I64:
            impl = _pykernels
    return impl.convolve(a_codes, a_degs, a_coefs, b_codes, b_degs, b_coefs, cap)


def koszul(gens, k, cap, codes):
    return _pick(k, cap).koszul(gens, k, cap, codes)


class Coder:
    """Dense coding of monomials over a fixed variable list up to a degree cap."""

    __slots__ = ("indices", "pos", "cap", "base", "k")

    def __init__(self, indices, cap: int):
        self.indices = tuple(sorted(set(indices)))
        self.pos = {i: j for j, i in enumerate(self.indices)}
        self.cap = cap
        self.base = cap + 1
        self.k = len(self.indices)

    def dense(self, m: Monomial) -> tuple[int, ...]:
        out = [0] * self.k
        for i, e in m.exps:
            out[self.pos[i]] = e
        return tuple(out)

    def encode(self, m: Monomial) -> int:
        code = 0
        base = self.base
        pos = self.pos
        for i, e in m.exps:
            code += e * base ** pos[i]
        return code

    def decode(self, code: int) -> Monomial:
        pairs = []
        base = self.base
        for i in self.indices:
            if not code:
                break
            code, e = divmod(code, base)
            if e:
                pairs.append((i, e))
        return Monomial._raw(tuple(pairs))
