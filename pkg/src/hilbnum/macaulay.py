"""Macaulay expansions, O-sequences and classification of N-graded numerators."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Iterable, Sequence

from hilbnum import kernels
from hilbnum.monomial import ONE
from hilbnum.series import CollapsedSeries, GradedSeries


@dataclass(frozen=True)
class UnivariateSeries:
    """Coefficients a_0..a_cap of a truncated series in t."""

    cap: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.cap + 1:
            raise ValueError(f"expected {self.cap + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def of(cls, coeffs: Iterable[int], cap: int | None = None) -> "UnivariateSeries":
        coeffs = [int(c) for c in coeffs]
        if cap is None:
            cap = len(coeffs) - 1
        if cap < 0:
            raise ValueError("a series needs at least one coefficient")
        coeffs = (coeffs + [0] * (cap + 1))[: cap + 1]
        return cls(cap, tuple(coeffs))

    @classmethod
    def parse(cls, text: str, cap: int | None = None) -> "UnivariateSeries":
        """``1,-1,0,2`` means 1 - t + 2t^3."""
        try:
            values = [int(tok) for tok in text.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"bad coefficient list {text!r}") from None
        return cls.of(values, cap)

    @classmethod
    def from_collapsed(cls, s: CollapsedSeries) -> "UnivariateSeries":
        return cls(s.cap, tuple(s.univariate()))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def divide_one_minus_t(self, times: int = 1) -> "UnivariateSeries":
        """Divide by (1 - t)^times via cumulative sums; exact through cap."""
        cur = list(self.coeffs)
        for _ in range(times):
            acc = 0
            for i, c in enumerate(cur):
                acc += c
                cur[i] = acc
        return UnivariateSeries(self.cap, tuple(cur))


@dataclass(frozen=True)
class MacaulayExpansion:
    """u = C(k_d, d) + C(k_{d-1}, d-1) + ... with k_d > k_{d-1} > ... >= j >= 1."""

    d: int
    terms: tuple[tuple[int, int], ...]  # (k, j) pairs, j descending

    def value(self) -> int:
        return sum(comb(k, j) for k, j in self.terms)


def macaulay_expand(u: int, d: int) -> MacaulayExpansion:
    if u < 0 or d < 1:
        raise ValueError("need u >= 0 and d >= 1")
    terms = []
    rest = u
    for j in range(d, 0, -1):
        if rest == 0:
            break
        k = j
        while comb(k + 1, j) <= rest:
            k += 1
        terms.append((k, j))
        rest -= comb(k, j)
    return MacaulayExpansion(d, tuple(terms))


def macaulay_bound(u: int, d: int) -> int:
    """u^<d>: raise every binomial of the expansion by one in both slots."""
    return sum(comb(k + 1, j + 1) for k, j in macaulay_expand(u, d).terms)


def is_o_sequence(h: UnivariateSeries | Sequence[int]) -> bool:
    coeffs = h.coeffs if isinstance(h, UnivariateSeries) else tuple(h)
    if not coeffs or coeffs[0] != 1 or min(coeffs) < 0:
        return False
    return all(coeffs[i + 1] <= macaulay_bound(coeffs[i], i) for i in range(1, len(coeffs) - 1))


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify_numerator`, valid only through ``cap``.

    ``certificates`` holds the (a, b) with 0 < a <= b for which the series is
    (1-t)^b times an O-sequence starting 1 + a t. ``degenerate`` lists the b
    where that O-sequence is 1 + 0t + 0t^2 + ... (the field itself).
    """

    cap: int
    certificates: tuple[tuple[int, int], ...] = ()
    degenerate: tuple[int, ...] = field(default=())

    @property
    def certified(self) -> bool:
        return bool(self.certificates)

    def __str__(self):
        if not self.certificates and not self.degenerate:
            return "NotCertified"
        parts = [f"G({a},{b})" for a, b in self.certificates]
        parts += [f"degenerate(b={b})" for b in self.degenerate]
        return " ".join(parts)


def classify_numerator(f: UnivariateSeries, b_max: int) -> Classification:
    if not f.coeffs or f.coeffs[0] != 1:
        raise ValueError("a Hilbert numerator has constant term 1")
    certs = []
    degenerate = []
    for b in range(1, b_max + 1):
        h = f.divide_one_minus_t(b)
        if not is_o_sequence(h):
            continue
        a = h.coeffs[1] if h.cap >= 1 else 0
        if 0 < a <= b:
            certs.append((a, b))
        elif a == 0:
            degenerate.append(b)
    return Classification(f.cap, tuple(certs), tuple(degenerate))


def _lambda_bounds(i: int) -> list[range]:
    # at most C(i+1, l) distinct degree-l monomials divide a degree-(i+1) one
    return [range(comb(i + 1, l) + 1) for l in range(1, i + 1)]


def lemma_q_degree_bound(a: Sequence[int]) -> int:
    """Upper bound on the degree of a numerator with prefix 1 + a_1 t + ... + a_d t^d.

    u_i bounds the number of minimal generators of degree i; the result is
    sum i * u_i, the degree of the lcm of all generators.
    """
    a = list(a)
    if not a:
        raise ValueError("need at least a_1")
    u = [max(0, -a[0])]
    for i in range(1, len(a)):
        # lcm's of tuples of lower-degree generators landing in degree i+1
        upper = -a[i]
        for lam in product(*_lambda_bounds(i)):
            size = sum(lam)
            if size < 2 or sum(l * c for l, c in enumerate(lam, start=1)) < i + 1:
                continue
            if size % 2:
                continue  # odd tuples only push w down
            count = 1
            for l, c in enumerate(lam):
                count *= comb(u[l], c)
            upper += count
        u.append(max(0, upper))
    return sum(i * ui for i, ui in enumerate(u, start=1))


def _central_binomial(r: int) -> int:
    if r == 0:
        return 1
    return comb(r - 1, (r - 1) // 2)


def bjorner_kalai_check(p: GradedSeries) -> bool:
    """|c_m| <= C(r-1, floor((r-1)/2)) with r the support size of m."""
    return all(abs(c) <= _central_binomial(len(m.exps)) for m, c in p.coeffs.items())


def pcond_check(p: GradedSeries) -> bool:
    """Divisor sums of p are a 0/1 order-ideal indicator through the cap.

    Only variables occurring in p need checking: divisor sums at a monomial
    with an extra variable equal those at its projection. The divisor sums
    are q = nu * p, computed and inspected in coded form.
    """
    indices = sorted({i for m in p.coeffs for i in m.support})
    if not indices:
        return p.coeffs.get(ONE, 0) in (0, 1)
    coder = kernels.Coder(indices, p.cap)
    k = coder.k
    all_codes, all_degs = kernels.staircase([], k, p.cap)
    terms = list(p.coeffs.items())
    q = kernels.convolve(all_codes, all_degs, [1] * len(all_codes),
                         [coder.encode(m) for m, _ in terms], [m.tdeg for m, _ in terms],
                         [c for _, c in terms], k, p.cap)
    if any(v != 1 for v in q.values()):
        return False
    pw = [coder.base**j for j in range(k)]
    for c in q:
        for j in range(k):
            if (c // pw[j]) % coder.base and (c - pw[j]) not in q:
                return False
    return True
