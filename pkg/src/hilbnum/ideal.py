"""Monomial ideals, their staircases, and degree-indexed generator streams."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from hilbnum import kernels
from hilbnum.errors import ParseError, StreamDegreeMismatch
from hilbnum.monomial import ONE, Monomial, divides, lcm, parse_monomial
from hilbnum.series import GradedSeries, nu

log = logging.getLogger(__name__)


class MonomialIdeal:
    """A monomial ideal stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is ``{1}``. Build
    instances with :func:`minimalize` unless the generators are known to be
    an antichain.
    """

    __slots__ = ("gens",)

    def __init__(self, gens: Iterable[Monomial] = ()):
        self.gens = tuple(sorted(set(gens), key=lambda m: (m.tdeg, m.exps)))

    @classmethod
    def parse(cls, lines: Iterable[str]) -> "MonomialIdeal":
        return minimalize(parse_monomial(s) for s in lines)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (ONE,)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted({i for g in self.gens for i in g.support}))

    @property
    def max_index(self) -> int:
        return max((g.max_index for g in self.gens), default=0)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal({[str(g) for g in self.gens]!r})"


def minimalize(raw: Iterable[Monomial]) -> MonomialIdeal:
    """Drop every monomial divisible by another one in the list."""
    kept: list[Monomial] = []
    for m in sorted(set(raw), key=lambda m: (m.tdeg, m.exps)):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(kept)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(divides(g, m) for g in ideal.gens)


def truncate_ideal(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Keep the generators supported on x1..xn."""
    return MonomialIdeal(g for g in ideal.gens if g.max_index <= n)


def truncate_below_degree(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """Ideal generated by the generators of total degree at most ``d``."""
    return MonomialIdeal(g for g in ideal.gens if g.tdeg <= d)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return minimalize(a.gens + b.gens)


def ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Generated by the pairwise lcm's of the two generator sets."""
    return minimalize(lcm(g, h) for g in a.gens for h in b.gens)


def staircase_complement(ideal: MonomialIdeal, n: int, cap: int) -> GradedSeries:
    """Sum of the monomials of x1..xn with degree <= cap that lie outside the ideal."""
    if n < 1:
        raise ValueError("n must be positive")
    coder = kernels.Coder(range(1, n + 1), cap)
    gens = [coder.dense(g) for g in truncate_ideal(ideal, n).gens if g.tdeg <= cap]
    codes, _ = kernels.staircase(gens, n, cap)
    return GradedSeries(cap, {coder.decode(c): 1 for c in codes}, n)


def char_series(ideal: MonomialIdeal, n: int, cap: int) -> GradedSeries:
    """Characteristic function of the ideal restricted to x1..xn."""
    return nu(n, cap) - staircase_complement(ideal, n, cap)


@dataclass(frozen=True)
class GeneratorStream:
    """Generators of an lfg ideal, listed one total degree at a time.

    ``per_degree(d)`` must be a pure function returning monomials of degree d.
    """

    name: str
    per_degree: Callable[[int], list[Monomial]]

    def __call__(self, d: int) -> list[Monomial]:
        return self.per_degree(d)


def realize_stream(stream: GeneratorStream, max_degree: int) -> MonomialIdeal:
    raw = []
    for d in range(1, max_degree + 1):
        for m in stream(d):
            if m.tdeg != d:
                raise StreamDegreeMismatch(
                    f"stream {stream.name!r} emitted {m} (degree {m.tdeg}) at degree {d}")
            raw.append(m)
    return minimalize(raw)


def _prefix(upto: int) -> list[tuple[int, int]]:
    return [(i, 1) for i in range(1, upto + 1)]


def _example_23gen(d: int) -> list[Monomial]:
    out = []
    i = d - 1  # a_i = x1 ... x_{i-1} x_i^2 has degree i + 1
    if i >= 1:
        out.append(Monomial._raw(tuple(_prefix(i - 1) + [(i, 2)])))
    j = d - 4  # b_j = x1 ... x_{j-2} x_j^6 has degree j + 4
    if j >= 2:
        out.append(Monomial._raw(tuple(_prefix(j - 2) + [(j, 6)])))
    return out


def example_23gen_stream() -> GeneratorStream:
    return GeneratorStream("example-23gen", _example_23gen)


def powers_stream(degrees: Iterable[int]) -> GeneratorStream:
    """x_i^{d_i} for each listed degree: a complete intersection."""
    degrees = tuple(int(d) for d in degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("powers degrees must be positive")

    def per_degree(d: int) -> list[Monomial]:
        return [Monomial.var(i, di) for i, di in enumerate(degrees, start=1) if di == d]

    return GeneratorStream("powers:" + ",".join(map(str, degrees)), per_degree)


def empty_stream() -> GeneratorStream:
    return GeneratorStream("empty", lambda d: [])


def ideal_stream(ideal: MonomialIdeal, name: str = "ideal") -> GeneratorStream:
    """View a finitely generated ideal as a stream."""
    by_degree: dict[int, list[Monomial]] = {}
    for g in ideal.gens:
        by_degree.setdefault(g.tdeg, []).append(g)
    return GeneratorStream(name, lambda d: list(by_degree.get(d, [])))


def named_stream(name: str) -> GeneratorStream:
    """Resolve ``example-23gen``, ``empty`` or ``powers:d1,d2,...``."""
    if name == "example-23gen":
        return example_23gen_stream()
    if name == "empty":
        return empty_stream()
    if name.startswith("powers:"):
        try:
            degrees = [int(t) for t in name[len("powers:"):].split(",") if t.strip()]
        except ValueError:
            raise ParseError(f"bad powers stream {name!r}") from None
        if not degrees:
            raise ParseError("powers stream needs at least one degree")
        return powers_stream(degrees)
    raise KeyError(name)


INDISTINGUISHABLE = "Indistinguishable"


def ideal_distance(a: MonomialIdeal, b: MonomialIdeal, kind: str, search_bound: int):
    """Truncated version of the variable-wise or degree-wise ideal metric.

    Returns ``Fraction(1, 2**k)`` for the largest agreeing level k (0 when
    they already differ at level 1), or ``INDISTINGUISHABLE`` when the two
    ideals agree through ``search_bound``.
    """
    if kind == "varwise":
        cut = truncate_ideal
    elif kind == "degreewise":
        cut = truncate_below_degree
    else:
        raise ValueError(f"unknown distance kind {kind!r}")
    agree = 0
    for level in range(1, search_bound + 1):
        if cut(a, level) != cut(b, level):
            return Fraction(1, 2**agree)
        agree = level
    return INDISTINGUISHABLE


def parse_ideal_text(text: str, source: str = "<text>") -> MonomialIdeal:
    """Parse the ideal file format: one generator per line, ``#`` comments."""
    parsed: list[tuple[int, Monomial]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        parsed.append((lineno, parse_monomial(body, line=lineno)))
    ideal = minimalize(m for _, m in parsed)
    kept = set(ideal.gens)
    seen: set[Monomial] = set()
    for lineno, m in parsed:
        if m not in kept or m in seen:
            log.warning("%s:%d: generator %s is redundant and was discarded", source, lineno, m)
        seen.add(m)
    return ideal


def parse_ideal_file(path) -> MonomialIdeal:
    path = Path(path)
    return parse_ideal_text(path.read_text(encoding="utf-8"), str(path))


def format_ideal(ideal: MonomialIdeal) -> str:
    return "".join(f"{g}\n" for g in ideal.gens)
