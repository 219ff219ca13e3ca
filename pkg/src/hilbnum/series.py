"""Degree-capped power series over Z in the variables x1, x2, ...

A :class:`GradedSeries` stores every coefficient of total degree at most
``cap``; two series are equal when they agree up to that cap. Products are
exact through the cap because the total-degree filtration is multiplicative.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Mapping

from hilbnum import kernels
from hilbnum.errors import ArithmeticOverflow, CapExceeded
from hilbnum.monomial import ONE, Monomial, Partition, multi_degree, parse_monomial

I64_MAX = 2**63 - 1


def _check64(c: int) -> int:
    if c > I64_MAX or c < -I64_MAX - 1:
        raise ArithmeticOverflow(f"coefficient {c} does not fit in 64 bits")
    return c


def _join_nvars(a, b):
    if a is None or b is None:
        return None
    return max(a, b)


def render_terms(terms: Iterable[tuple[int, str]]) -> str:
    """Render ``(coefficient, monomial_text)`` pairs as ``1 - x1 + 2*x2``."""
    out = []
    for c, name in terms:
        mag = abs(c)
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}*{name}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


class GradedSeries:
    """Element of Z[[X]] modulo terms of total degree above ``cap``.

    ``nvars`` bounds the variable indices that may occur (``None`` means
    unbounded). It is bookkeeping only and does not take part in equality.
    """

    __slots__ = ("cap", "nvars", "coeffs")

    def __init__(self, cap: int, coeffs: Mapping[Monomial, int] | None = None,
                 nvars: int | None = None):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        if nvars is not None and nvars < 1:
            raise ValueError("nvars must be positive or None")
        clean = {}
        for m, c in (coeffs or {}).items():
            c = int(c)
            if not c or m.tdeg > cap:
                continue
            if nvars is not None and m.max_index > nvars:
                raise ValueError(f"{m} involves a variable beyond x{nvars}")
            clean[m] = _check64(c)
        self.cap = cap
        self.nvars = nvars
        self.coeffs = clean

    @classmethod
    def from_terms(cls, cap: int, terms: Iterable[tuple[Monomial, int]],
                   nvars: int | None = None) -> "GradedSeries":
        acc: dict[Monomial, int] = {}
        for m, c in terms:
            acc[m] = acc.get(m, 0) + c
        return cls(cap, acc, nvars)

    @classmethod
    def zero(cls, cap: int, nvars: int | None = None) -> "GradedSeries":
        return cls(cap, {}, nvars)

    @classmethod
    def one(cls, cap: int, nvars: int | None = None) -> "GradedSeries":
        return cls(cap, {ONE: 1}, nvars)

    @classmethod
    def monomial(cls, m: Monomial, cap: int, coeff: int = 1,
                 nvars: int | None = None) -> "GradedSeries":
        return cls(cap, {m: coeff}, nvars)

    @classmethod
    def parse(cls, text: str, cap: int, nvars: int | None = None) -> "GradedSeries":
        """Parse a signed sum like ``1 - x1 + 2*x1*x2``."""
        acc: dict[Monomial, int] = {}
        s = text.replace(" ", "").replace("-", "+-")
        for tok in filter(None, s.split("+")):
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            head, _, rest = tok.partition("*")
            if head.isdigit() and rest:
                c, mono = int(head), parse_monomial(rest)
            elif tok.isdigit():
                c, mono = int(tok), ONE
            else:
                c, mono = 1, parse_monomial(tok)
            acc[mono] = acc.get(mono, 0) + sign * c
        return cls(cap, acc, nvars)

    def support(self) -> list[Monomial]:
        return sorted(self.coeffs)

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical monomial order."""
        return [(m, self.coeffs[m]) for m in sorted(self.coeffs)]

    def coefficient_at(self, m: Monomial) -> int:
        if m.tdeg > self.cap:
            raise CapExceeded(f"{m} has degree {m.tdeg} above cap {self.cap}")
        return self.coeffs.get(m, 0)

    def __getitem__(self, m: Monomial) -> int:
        return self.coefficient_at(m)

    @property
    def max_index(self) -> int:
        return max((m.max_index for m in self.coeffs), default=0)

    def truncate(self, cap: int) -> "GradedSeries":
        if cap > self.cap:
            raise CapExceeded(f"cannot raise cap from {self.cap} to {cap}")
        return GradedSeries(cap, self.coeffs, self.nvars)

    def restrict(self, n: int) -> "GradedSeries":
        """Kill every term involving a variable beyond x_n."""
        nv = n if self.nvars is None else min(n, self.nvars)
        return GradedSeries(self.cap, {m: c for m, c in self.coeffs.items()
                                       if m.max_index <= n}, nv)

    def with_nvars(self, nvars: int | None) -> "GradedSeries":
        return GradedSeries(self.cap, self.coeffs, nvars)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.cap, frozenset(self.coeffs.items())))

    def __neg__(self):
        return GradedSeries(self.cap, {m: -c for m, c in self.coeffs.items()}, self.nvars)

    def __add__(self, other):
        if isinstance(other, int):
            other = GradedSeries.one(self.cap) * other
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = GradedSeries.one(self.cap) * other
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedSeries(self.cap, {m: c * other for m, c in self.coeffs.items()},
                                self.nvars)
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        order = sorted(self.coeffs, key=lambda m: (m.tdeg, m.exps))
        return render_terms((self.coeffs[m], str(m)) for m in order)

    def __repr__(self):
        return f"GradedSeries(cap={self.cap}, {str(self)!r})"

    def to_dict(self) -> dict:
        return {"cap": self.cap,
                "terms": [{"monomial": str(m), "coeff": c} for m, c in self.terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "GradedSeries":
        terms = ((parse_monomial(t["monomial"]), int(t["coeff"])) for t in data["terms"])
        return cls.from_terms(int(data["cap"]), terms)

    @classmethod
    def from_json(cls, text: str) -> "GradedSeries":
        return cls.from_dict(json.loads(text))


def coefficient_at(f: GradedSeries, m: Monomial) -> int:
    return f.coefficient_at(m)


def add(f: GradedSeries, g: GradedSeries) -> GradedSeries:
    cap = min(f.cap, g.cap)
    out = {m: c for m, c in f.coeffs.items() if m.tdeg <= cap}
    for m, c in g.coeffs.items():
        if m.tdeg <= cap:
            out[m] = out.get(m, 0) + c
    return GradedSeries(cap, out, _join_nvars(f.nvars, g.nvars))


def multiply(f: GradedSeries, g: GradedSeries) -> GradedSeries:
    cap = min(f.cap, g.cap)
    nvars = _join_nvars(f.nvars, g.nvars)
    if not f.coeffs or not g.coeffs:
        return GradedSeries(cap, {}, nvars)
    indices = {i for m in f.coeffs for i in m.support}
    indices.update(i for m in g.coeffs for i in m.support)
    coder = kernels.Coder(indices, cap)
    fa = [(coder.encode(m), m.tdeg, c) for m, c in f.coeffs.items() if m.tdeg <= cap]
    ga = [(coder.encode(m), m.tdeg, c) for m, c in g.coeffs.items() if m.tdeg <= cap]
    if not fa or not ga:
        return GradedSeries(cap, {}, nvars)
    raw = kernels.convolve(*zip(*fa), *zip(*ga), coder.k, cap)
    return GradedSeries(cap, {coder.decode(code): c for code, c in raw.items()}, nvars)


def nu(n: int, cap: int) -> GradedSeries:
    """Sum of all monomials in x1..xn up to ``cap``."""
    if n < 1:
        raise ValueError("n must be positive")
    coder = kernels.Coder(range(1, n + 1), cap)
    codes, _ = kernels.staircase([], n, cap)
    return GradedSeries(cap, {coder.decode(c): 1 for c in codes}, n)


def mu(n: int, cap: int) -> GradedSeries:
    """Truncation of the product of (1 - x_i) over i = 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = {}
    for k in range(min(n, cap) + 1):
        sign = -1 if k % 2 else 1
        for sigma in combinations(range(1, n + 1), k):
            coeffs[Monomial._raw(tuple((i, 1) for i in sigma))] = sign
    return GradedSeries(cap, coeffs, n)


class CollapsedSeries:
    """Degree-capped series in t_1..t_r keyed by multidegree tuples."""

    __slots__ = ("r", "cap", "coeffs")

    def __init__(self, r: int, cap: int, coeffs: Mapping[tuple[int, ...], int] | None = None):
        if r < 1:
            raise ValueError("r must be positive")
        if cap < 0:
            raise ValueError("cap must be non-negative")
        clean = {}
        for deg, c in (coeffs or {}).items():
            deg = tuple(int(v) for v in deg)
            if len(deg) != r or min(deg, default=0) < 0:
                raise ValueError(f"bad multidegree {deg} for r={r}")
            c = int(c)
            if c and sum(deg) <= cap:
                clean[deg] = _check64(c)
        self.r = r
        self.cap = cap
        self.coeffs = clean

    @classmethod
    def from_univariate(cls, coeffs: Iterable[int], cap: int | None = None) -> "CollapsedSeries":
        coeffs = list(coeffs)
        if cap is None:
            cap = max(len(coeffs) - 1, 0)
        return cls(1, cap, {(d,): c for d, c in enumerate(coeffs)})

    def coefficient(self, deg) -> int:
        deg = (deg,) if isinstance(deg, int) else tuple(deg)
        if sum(deg) > self.cap:
            raise CapExceeded(f"degree {deg} above cap {self.cap}")
        return self.coeffs.get(deg, 0)

    def univariate(self) -> list[int]:
        if self.r != 1:
            raise ValueError("univariate view needs r = 1")
        return [self.coeffs.get((d,), 0) for d in range(self.cap + 1)]

    def truncate(self, cap: int) -> "CollapsedSeries":
        if cap > self.cap:
            raise CapExceeded(f"cannot raise cap from {self.cap} to {cap}")
        return CollapsedSeries(self.r, cap, self.coeffs)

    def _check_r(self, other):
        if self.r != other.r:
            raise ValueError(f"mismatched class counts {self.r} and {other.r}")

    def __eq__(self, other):
        if not isinstance(other, CollapsedSeries):
            return NotImplemented
        return (self.r, self.cap, self.coeffs) == (other.r, other.cap, other.coeffs)

    def __hash__(self):
        return hash((self.r, self.cap, frozenset(self.coeffs.items())))

    def __neg__(self):
        return CollapsedSeries(self.r, self.cap, {d: -c for d, c in self.coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, CollapsedSeries):
            return NotImplemented
        self._check_r(other)
        cap = min(self.cap, other.cap)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return CollapsedSeries(self.r, cap, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CollapsedSeries):
            return NotImplemented
        self._check_r(other)
        cap = min(self.cap, other.cap)
        out: dict[tuple[int, ...], int] = {}
        for da, ca in self.coeffs.items():
            ta = sum(da)
            for db, cb in other.coeffs.items():
                if ta + sum(db) <= cap:
                    d = tuple(x + y for x, y in zip(da, db))
                    out[d] = out.get(d, 0) + ca * cb
        return CollapsedSeries(self.r, cap, out)

    def _name(self, deg):
        if not any(deg):
            return "1"
        if self.r == 1:
            return "t" if deg[0] == 1 else f"t^{deg[0]}"
        return "*".join(f"t{l + 1}" if e == 1 else f"t{l + 1}^{e}"
                        for l, e in enumerate(deg) if e)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        order = sorted(self.coeffs, key=lambda d: (sum(d), tuple(-v for v in d)))
        return [(d, self.coeffs[d]) for d in order]

    def __str__(self):
        return render_terms((c, self._name(d)) for d, c in self.terms())

    def __repr__(self):
        return f"CollapsedSeries(r={self.r}, cap={self.cap}, {str(self)!r})"

    def to_dict(self) -> dict:
        return {"r": self.r, "cap": self.cap,
                "terms": [{"deg": list(d), "coeff": c} for d, c in self.terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "CollapsedSeries":
        acc: dict[tuple[int, ...], int] = {}
        for t in data["terms"]:
            d = tuple(t["deg"])
            acc[d] = acc.get(d, 0) + int(t["coeff"])
        return cls(int(data["r"]), int(data["cap"]), acc)

    @classmethod
    def from_json(cls, text: str) -> "CollapsedSeries":
        return cls.from_dict(json.loads(text))


def collapse(f: GradedSeries, y: Partition) -> CollapsedSeries:
    """Substitute x_i -> t_{class(i)}."""
    out: dict[tuple[int, ...], int] = {}
    for m, c in f.coeffs.items():
        d = multi_degree(m, y)
        out[d] = out.get(d, 0) + c
    return CollapsedSeries(y.r, f.cap, out)


def primes(count: int) -> list[int]:
    """The first ``count`` primes by trial division."""
    found: list[int] = []
    cand = 2
    while len(found) < count:
        if all(cand % p for p in found if p * p <= cand):
            found.append(cand)
        cand += 1
    return found


def to_dirichlet(f: GradedSeries) -> dict[int, int]:
    """Map x1^a1...xn^an to 2^a1 3^a2 ... and return the number-theoretic function.

    Always contains the key 1.
    """
    if f.nvars is None:
        raise ValueError("to_dirichlet needs a series with finitely many variables")
    ps = primes(f.nvars)
    out = {1: 0}
    for m, c in f.coeffs.items():
        key = 1
        for i, e in m.exps:
            key *= ps[i - 1] ** e
            if key > I64_MAX:
                raise ArithmeticOverflow(f"integer key for {m} exceeds 64 bits")
        out[key] = c
    return out


def dirichlet_convolve(f: Mapping[int, int], g: Mapping[int, int], n: int) -> int:
    """(f * g)(n) = sum over divisors d of n of f(d) g(n/d)."""
    return sum(f.get(d, 0) * g.get(n // d, 0) for d in range(1, n + 1) if n % d == 0)
