"""Pure-Python implementations of the hot kernels.

Every kernel works on dense exponent tuples over ``k`` compressed variable
slots and reports monomials as integer codes ``sum(e[j] * (cap+1)**j)``.
Codes add under multiplication as long as the product stays within ``cap``.
The compiled module ``_ckernels`` exposes the same functions.
"""

from itertools import combinations

import numpy as np


def _powers(k, cap):
    base = cap + 1
    return [base**j for j in range(k)]


def incl_excl(gens, k, cap):
    """Signed lcm sum over all generator subsets, pruned at ``cap``.

    ``gens`` must be sorted by ascending total degree.
    """
    pw = _powers(k, cap)
    degs = [sum(g) for g in gens]
    out = {0: 1}
    ng = len(gens)

    def walk(start, cur, deg, code, sign):
        for j in range(start, ng):
            if degs[j] > cap:
                break
            g = gens[j]
            new = list(cur)
            ndeg = deg
            ncode = code
            for s in range(k):
                if g[s] > new[s]:
                    ndeg += g[s] - new[s]
                    ncode += (g[s] - new[s]) * pw[s]
                    new[s] = g[s]
            if ndeg > cap:
                continue
            out[ncode] = out.get(ncode, 0) - sign
            walk(j + 1, new, ndeg, ncode, -sign)

    walk(0, [0] * k, 0, 0, 1)
    return {c: v for c, v in out.items() if v}


def _member(gens, exps):
    for g in gens:
        for a, b in zip(g, exps):
            if a > b:
                break
        else:
            return True
    return False


def staircase(gens, k, cap):
    """Codes and degrees of all monomials of degree <= cap outside the ideal.

    Descends variable by variable with a degree budget and stops raising an
    exponent as soon as the partial monomial enters the ideal.
    """
    pw = _powers(k, cap)
    exps = [0] * k
    codes = []
    degs = []
    if k == 0:
        if not _member(gens, exps):
            codes.append(0)
            degs.append(0)
        return codes, degs

    def walk(pos, budget, code):
        for e in range(budget + 1):
            exps[pos] = e
            if _member(gens, exps):
                break
            if pos == k - 1:
                codes.append(code + e * pw[pos])
                degs.append(cap - budget + e)
            else:
                walk(pos + 1, budget - e, code + e * pw[pos])
        exps[pos] = 0

    walk(0, cap, 0)
    return codes, degs


def convolve(a_codes, a_degs, a_coefs, b_codes, b_degs, b_coefs, cap):
    """Graded product of two coded series, dropping terms above ``cap``."""
    if len(a_codes) > len(b_codes):
        a_codes, a_degs, a_coefs, b_codes, b_degs, b_coefs = (
            b_codes, b_degs, b_coefs, a_codes, a_degs, a_coefs)
    order = sorted(range(len(b_codes)), key=b_degs.__getitem__)
    bc = [b_codes[i] for i in order]
    bd = [b_degs[i] for i in order]
    bf = [b_coefs[i] for i in order]
    # prefix bounds: bound[d] = number of b terms of degree <= d
    bound = [0] * (cap + 2)
    for d in bd:
        if d <= cap:
            bound[d + 1] += 1
    for d in range(1, cap + 2):
        bound[d] += bound[d - 1]
    out = {}
    get = out.get
    for ca, da, fa in zip(a_codes, a_degs, a_coefs):
        if da > cap:
            continue
        stop = bound[cap - da + 1]
        for cb, fb in zip(bc[:stop], bf[:stop]):
            c = ca + cb
            out[c] = get(c, 0) + fa * fb
    return {c: v for c, v in out.items() if v}


def koszul(gens, k, cap, codes):
    """Numerator coefficient of each coded monomial by counting Koszul faces.

    For every monomial m the faces are the squarefree sets s of its support
    with m / x_s in the ideal; the coefficient is the reduced Euler
    characteristic of that complex, plus 1 for the unit monomial.
    """
    if not len(codes):
        return []
    base = cap + 1
    monos = [[(c // base**j) % base for j in range(k)] for c in codes]
    M = np.asarray(monos, dtype=np.int64).reshape(len(monos), k)
    G = np.asarray(gens, dtype=np.int64).reshape(len(gens), k)
    total = np.zeros(len(monos), dtype=np.int64)
    total[(M == 0).all(axis=1)] = 1
    for size in range(k + 1):
        sign = 1 if size % 2 == 1 else -1
        for sigma in combinations(range(k), size):
            shifted = M.copy()
            if sigma:
                shifted[:, list(sigma)] -= 1
            valid = (shifted >= 0).all(axis=1)
            if len(G):
                member = (shifted[:, None, :] >= G[None, :, :]).all(axis=2).any(axis=1)
            else:
                member = np.zeros(len(monos), dtype=bool)
            total += sign * (valid & member)
    return total.tolist()
