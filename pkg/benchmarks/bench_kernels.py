"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--cap 10] [--nvars 6]

Both modules are called directly, so the env switch HILBNUM_PURE has no
effect here. Results are checked for equality before any timing is shown.
"""

from __future__ import annotations

import argparse
import random
import time
from itertools import combinations

from hilbnum import _pykernels
from hilbnum.kernels import Coder
from hilbnum.sampling import random_ideal

try:
    from hilbnum import _ckernels
except ImportError:
    _ckernels = None


def _best(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def cases(nvars: int, cap: int, seed: int):
    rng = random.Random(seed)
    coder = Coder(range(1, nvars + 1), cap)
    ideals = [random_ideal(rng, max_gens=6, nvars=nvars, max_deg=4) for _ in range(40)]
    dense = [[coder.dense(g) for g in ideal.gens] for ideal in ideals]

    def incl_excl(mod):
        return [mod.incl_excl(g, nvars, cap) for g in dense]

    def staircase(mod):
        return [mod.staircase(g, nvars, cap) for g in dense]

    all_codes, all_degs = _pykernels.staircase([], nvars, cap)
    pw = [coder.base**j for j in range(nvars)]
    m_codes, m_degs, m_coefs = [], [], []
    for size in range(min(nvars, cap) + 1):
        for sigma in combinations(range(nvars), size):
            m_codes.append(sum(pw[j] for j in sigma))
            m_degs.append(size)
            m_coefs.append(-1 if size % 2 else 1)

    def convolve(mod):
        return mod.convolve(all_codes, all_degs, [1] * len(all_codes),
                            m_codes, m_degs, m_coefs, cap)

    small = dense[:5]

    def koszul(mod):
        return [mod.koszul(g, nvars, cap, all_codes) for g in small]

    return [("incl_excl x40", incl_excl), ("staircase x40", staircase),
            ("convolve nu*mu", convolve), ("koszul x5", koszul)]


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--cap", type=int, default=10)
    ap.add_argument("--nvars", type=int, default=6)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print(f"nvars={args.nvars} cap={args.cap} best of {args.repeat}")
    print(f"{'kernel':<16}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, fn in cases(args.nvars, args.cap, args.seed):
        t_py, r_py = _best(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<16}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_c, r_c = _best(lambda: fn(_ckernels), args.repeat)
        if r_c != r_py:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<16}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
