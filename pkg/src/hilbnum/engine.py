"""Hilbert numerators of monomial ideals by four independent routes.

* :func:`numerator_incl_excl` sums signed lcm's over generator subsets;
* :func:`numerator_lcm_lattice` reads Moebius values off the lcm lattice;
* :func:`koszul_coefficient` / :func:`numerator_koszul` count faces of the
  upper Koszul complex of each monomial;
* :func:`numerator_oracle` multiplies the truncated staircase by
  prod (1 - x_i) directly.

The oracle is deliberately the dumbest of the four and anchors the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from hilbnum import kernels
from hilbnum.ideal import (
    GeneratorStream,
    MonomialIdeal,
    contains,
    example_23gen_stream,
    ideal_intersection,
    minimalize,
    realize_stream,
    staircase_complement,
    truncate_ideal,
)
from hilbnum.monomial import ONE, Monomial, Partition, divides, lcm, quotient_exact
from hilbnum.series import CollapsedSeries, GradedSeries, collapse, mu

METHODS = ("incl-excl", "lcm-lattice", "koszul", "oracle")


def _nvars_of(ideal: MonomialIdeal) -> int:
    return max(1, ideal.max_index)


def numerator_incl_excl(ideal: MonomialIdeal, cap: int) -> GradedSeries:
    """Signed sum of lcm(sigma) over all subsets sigma of the generators.

    Subsets are walked depth-first in ascending generator degree; a branch is
    cut as soon as its running lcm leaves the cap.
    """
    coder = kernels.Coder(ideal.variables, cap)
    gens = [coder.dense(g) for g in ideal.gens if g.tdeg <= cap]
    raw = kernels.incl_excl(gens, coder.k, cap)
    return GradedSeries(cap, {coder.decode(c): v for c, v in raw.items()}, _nvars_of(ideal))


@dataclass(frozen=True)
class LcmLattice:
    """Lcm's of generator subsets with their Moebius values mu(1, m)."""

    elements: tuple[Monomial, ...]
    mobius: dict

    def __contains__(self, m):
        return m in self.mobius


def build_lcm_lattice(ideal: MonomialIdeal, cap: int | None = None) -> LcmLattice:
    """Close {1} and the generators under pairwise lcm, then run the Moebius recursion.

    With ``cap`` only elements of degree <= cap are built; that part of the
    lattice is complete because every divisor of such an element is small too.
    """
    def ok(m):
        return cap is None or m.tdeg <= cap

    elements = {ONE}
    frontier = [g for g in ideal.gens if ok(g)]
    elements.update(frontier)
    while frontier:
        fresh = []
        current = list(elements)
        for a in frontier:
            for b in current:
                c = lcm(a, b)
                if c not in elements and ok(c):
                    elements.add(c)
                    fresh.append(c)
        frontier = fresh
    order = sorted(elements, key=lambda m: (m.tdeg, m.exps))
    mob: dict[Monomial, int] = {}
    for m in order:
        if m.is_one():
            mob[m] = 1
            continue
        mob[m] = -sum(v for s, v in mob.items() if divides(s, m))
    return LcmLattice(tuple(order), mob)


def numerator_lcm_lattice(ideal: MonomialIdeal, cap: int) -> GradedSeries:
    if ideal.is_unit():
        # lcm of the empty set and of {1} coincide, so the lattice loses the cancellation
        return GradedSeries(cap, {}, 1)
    lattice = build_lcm_lattice(ideal, cap)
    return GradedSeries(cap, lattice.mobius, _nvars_of(ideal))


@dataclass(frozen=True)
class KoszulComplex:
    """Faces sigma of the support of m with m / prod(x_sigma) in the ideal."""

    m: Monomial
    faces: tuple[tuple[int, ...], ...]

    def reduced_euler(self) -> int:
        return sum(1 if len(f) % 2 else -1 for f in self.faces)


def koszul_complex(ideal: MonomialIdeal, m: Monomial) -> KoszulComplex:
    supp = m.support
    faces = []
    for size in range(len(supp) + 1):
        for sigma in combinations(supp, size):
            sq = Monomial._raw(tuple((i, 1) for i in sigma))
            if contains(ideal, quotient_exact(m, sq)):
                faces.append(sigma)
    return KoszulComplex(m, tuple(faces))


def koszul_coefficient(ideal: MonomialIdeal, m: Monomial) -> int:
    """Coefficient of m in the numerator via the reduced Euler characteristic.

    The empty face counts -1. The unit monomial additionally carries the
    constant 1 of the numerator, which the complex alone does not see.
    """
    chi = koszul_complex(ideal, m).reduced_euler()
    return chi + 1 if m.is_one() else chi


def numerator_koszul(ideal: MonomialIdeal, n: int, cap: int) -> GradedSeries:
    """Koszul coefficient of every monomial in x1..xn up to ``cap``."""
    if n < 1:
        raise ValueError("n must be positive")
    coder = kernels.Coder(range(1, n + 1), cap)
    codes, _ = kernels.staircase([], n, cap)
    gens = [coder.dense(g) for g in truncate_ideal(ideal, n).gens if g.tdeg <= cap]
    values = kernels.koszul(gens, n, cap, codes)
    return GradedSeries(cap, {coder.decode(c): v for c, v in zip(codes, values) if v}, n)


def numerator_oracle(ideal: MonomialIdeal, n: int, cap: int) -> GradedSeries:
    """prod_{i<=n}(1 - x_i) times the staircase of the truncated ideal.

    Same product as ``mu(n, cap) * staircase_complement(...)``, kept in coded
    form until the end so only the surviving terms get decoded.
    """
    if n < 1:
        raise ValueError("n must be positive")
    coder = kernels.Coder(range(1, n + 1), cap)
    gens = [coder.dense(g) for g in truncate_ideal(ideal, n).gens if g.tdeg <= cap]
    q_codes, q_degs = kernels.staircase(gens, n, cap)
    if not q_codes:
        return GradedSeries(cap, {}, n)
    pw = [coder.base**j for j in range(n)]
    m_codes, m_degs, m_coefs = [], [], []
    for size in range(min(n, cap) + 1):
        sign = -1 if size % 2 else 1
        for sigma in combinations(range(n), size):
            m_codes.append(sum(pw[j] for j in sigma))
            m_degs.append(size)
            m_coefs.append(sign)
    raw = kernels.convolve(m_codes, m_degs, m_coefs, q_codes, q_degs, [1] * len(q_codes), n, cap)
    return GradedSeries(cap, {coder.decode(c): v for c, v in raw.items()}, n)


def numerator(ideal: MonomialIdeal, cap: int, method: str = "incl-excl",
              n: int | None = None) -> GradedSeries:
    """Dispatch on ``method``; ``n`` defaults to the largest variable used."""
    if n is None:
        n = _nvars_of(ideal)
    if method == "incl-excl":
        return numerator_incl_excl(ideal, cap)
    if method == "lcm-lattice":
        return numerator_lcm_lattice(ideal, cap)
    if method == "koszul":
        return numerator_koszul(ideal, n, cap)
    if method == "oracle":
        return numerator_oracle(ideal, n, cap)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class Mismatch:
    """First coefficient on which two methods disagree."""

    left: str
    right: str
    monomial: Monomial
    left_value: int
    right_value: int

    def to_dict(self) -> dict:
        return {"left": self.left, "right": self.right, "monomial": str(self.monomial),
                "left_coeff": self.left_value, "right_coeff": self.right_value}


def first_difference(a: GradedSeries, b: GradedSeries):
    keys = sorted(set(a.coeffs) | set(b.coeffs), key=lambda m: (m.tdeg, m.exps))
    for m in keys:
        if a.coeffs.get(m, 0) != b.coeffs.get(m, 0):
            return m
    return None


def cross_validate(ideal: MonomialIdeal, cap: int, n: int | None = None,
                   methods: Sequence[str] = METHODS):
    """Run every method; return ``(results, mismatch_or_None)``.

    Results are compared on x1..xn, where the truncating methods live.
    """
    if n is None:
        n = _nvars_of(ideal)
    results = {name: numerator(ideal, cap, name, n).restrict(n) for name in methods}
    ref = methods[0]
    for name in methods[1:]:
        m = first_difference(results[ref], results[name])
        if m is not None:
            return results, Mismatch(ref, name, m, results[ref].coeffs.get(m, 0),
                                     results[name].coeffs.get(m, 0))
    return results, None


def truncation_law(ideal: MonomialIdeal, n: int, cap: int) -> bool:
    """Does restricting the full numerator to x1..xn equal the n-variable oracle?"""
    return numerator_incl_excl(ideal, cap).restrict(n) == numerator_oracle(ideal, n, cap)


def split_incl_excl(ideal: MonomialIdeal, parts, cap: int) -> bool:
    """Check p^(I) = p^(I1) + p^(I2) - p^(I1 cap I2) for a two-block split, p^ = p - 1."""
    block1, block2 = (tuple(b) for b in parts)
    if sorted(block1 + block2, key=lambda m: m.exps) != sorted(ideal.gens, key=lambda m: m.exps):
        raise ValueError("parts must split the minimal generators of the ideal")
    i1, i2 = minimalize(block1), minimalize(block2)

    def hat(j):
        return numerator_incl_excl(j, cap) - 1

    return hat(ideal) == hat(i1) + hat(i2) - hat(ideal_intersection(i1, i2))


@dataclass(frozen=True)
class ConvergenceResult:
    series: list  # (n, CollapsedSeries) for n = 1..n_max
    stabilized_prefix: int

    def stabilized(self) -> CollapsedSeries:
        """The last approximation cut to the stabilized degree."""
        return self.series[-1][1].truncate(self.stabilized_prefix)


def agreement_degree(a: CollapsedSeries, b: CollapsedSeries) -> int:
    """Largest D with a and b equal through total degree D (-1 if they differ at 0)."""
    cap = min(a.cap, b.cap)
    for d in range(cap + 1):
        keys = {k for k in a.coeffs if sum(k) == d} | {k for k in b.coeffs if sum(k) == d}
        if any(a.coeffs.get(k, 0) != b.coeffs.get(k, 0) for k in keys):
            return d - 1
    return cap


def convergence_run(stream: GeneratorStream, y: Partition, n_max: int,
                    cap: int) -> ConvergenceResult:
    """Collapsed numerators g_n of the stream truncated to n = 1..n_max variables."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    ideal = realize_stream(stream, cap) if cap >= 1 else MonomialIdeal()
    series = []
    for n in range(1, n_max + 1):
        series.append((n, collapse(numerator_oracle(ideal, n, cap), y)))
    # g_0 = 1: no variables, nothing to divide out
    prev = series[-2][1] if n_max >= 2 else CollapsedSeries(y.r, cap, {(0,) * y.r: 1})
    return ConvergenceResult(series, max(agreement_degree(prev, series[-1][1]), 0))


def _var(i: int, cap: int, e: int = 1) -> GradedSeries:
    return GradedSeries.monomial(Monomial.var(i, e), cap)


def recursion_step_23gen(n: int, cap: int) -> GradedSeries:
    """v_n = (x_{n-1} + x_n^4) x_1 ... x_{n-2} x_n^2 prod_{i<n} (x_i - 1), built literally."""
    if n < 2:
        raise ValueError("the recursion term needs n >= 2")
    v = _var(n - 1, cap) + _var(n, cap, 4)
    v = v * _var(n, cap, 2)
    for i in range(1, n - 1):
        v = v * _var(i, cap)
    for i in range(1, n):
        v = v * (_var(i, cap) - 1)
    return v


def verify_23gen_recursion(n_max: int, cap: int) -> bool:
    """Check p_n - p_{n-1} = (-1)^n v_n for n = 2..n_max on the example ideal.

    n = 1 has no recursion term, so ``n_max = 1`` is vacuously true.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    ideal = realize_stream(example_23gen_stream(), max(cap, 1))
    prev = numerator_oracle(ideal, 1, cap)
    ok = True
    for n in range(2, n_max + 1):
        cur = numerator_oracle(ideal, n, cap)
        sign = 1 if n % 2 == 0 else -1
        if cur - prev != recursion_step_23gen(n, cap) * sign:
            ok = False
        prev = cur
    return ok
