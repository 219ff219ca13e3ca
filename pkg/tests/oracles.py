"""Brute-force oracles shared by the unit and acceptance tests."""

from itertools import combinations, combinations_with_replacement
from math import comb

from hilbnum.ideal import minimalize
from hilbnum.series import nu

SEARCH_LIMIT = 400_000


def _monomials(n, d):
    return list(combinations_with_replacement(range(n), d))


def max_growth_in(u, d, n):
    """Largest number of degree-(d+1) monomials in n variables whose degree-d
    divisors all lie in some u-element set S of degree-d monomials.

    That is the most an order ideal with u monomials in degree d can have in
    degree d+1. Returns None when n variables have fewer than u such monomials.
    """
    low = _monomials(n, d)
    if u > len(low):
        return None
    where = {m: k for k, m in enumerate(low)}
    needs = []
    for m in _monomials(n, d + 1):
        mask = 0
        for j in range(d + 1):
            mask |= 1 << where[m[:j] + m[j + 1:]]
        needs.append(mask)
    best = 0
    for chosen in combinations(range(len(low)), u):
        s = 0
        for k in chosen:
            s |= 1 << k
        best = max(best, sum(1 for mk in needs if mk & ~s == 0))
    return best


def max_growth(u, d):
    """Best growth over every variable count up to 3, the smallest count that
    fits u monomials, and one more variable when that search stays small."""
    n0 = 1
    while comb(n0 + d - 1, d) < u:
        n0 += 1
    best = None
    for n in sorted({n0, n0 + 1, 1, 2, 3}):
        if n < n0:
            continue
        if n != n0 and comb(comb(n + d - 1, d), u) > SEARCH_LIMIT:
            continue
        value = max_growth_in(u, d, n)
        best = value if best is None else max(best, value)
    return best


def antichain_ideals(n, d):
    """Every monomial ideal minimally generated in degrees 1..d inside x1..xn."""
    pool = [m for m in nu(n, d).coeffs if not m.is_one()]
    for mask in range(1 << len(pool)):
        gens = [pool[k] for k in range(len(pool)) if mask >> k & 1]
        ideal = minimalize(gens)
        if len(ideal) == len(gens):
            yield ideal
