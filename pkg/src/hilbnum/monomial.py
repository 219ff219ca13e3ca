"""Sparse monomials in countably many variables x1, x2, x3, ...

A monomial is stored as a tuple of ``(index, exponent)`` pairs with strictly
increasing indices and positive exponents; the empty tuple is the unit 1.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from hilbnum.errors import ArithmeticOverflow, ClassOutOfRange, NotDivisible, ParseError

# indices and exponents are kept in signed 32-bit range
MAX_SMALL = 2**31 - 1


def _check_small(value: int, what: str) -> int:
    if value > MAX_SMALL:
        raise ArithmeticOverflow(f"{what} {value} exceeds {MAX_SMALL}")
    return value


class Monomial:
    """Immutable element of the free abelian monoid on x1, x2, ...

    Equality and hashing are structural. ``<`` is the canonical output order:
    lexicographic on the pair list.
    """

    __slots__ = ("exps", "tdeg", "_hash")

    def __init__(self, exps: Iterable[tuple[int, int]] = ()):
        pairs = tuple((int(i), int(e)) for i, e in exps)
        prev = 0
        for i, e in pairs:
            if i < 1:
                raise ValueError(f"variable index must be positive, got {i}")
            if i <= prev:
                raise ValueError("variable indices must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponents must be positive, got {e} for x{i}")
            _check_small(i, "variable index")
            _check_small(e, "exponent")
            prev = i
        self._set(pairs)

    def _set(self, pairs):
        self.exps = pairs
        self.tdeg = sum(e for _, e in pairs)
        self._hash = hash(pairs)

    @classmethod
    def _raw(cls, pairs: tuple) -> "Monomial":
        # trusted constructor: pairs already canonical
        m = cls.__new__(cls)
        m._set(pairs)
        return m

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> "Monomial":
        return cls(sorted((i, e) for i, e in exps.items() if e))

    @classmethod
    def var(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls(((index, exponent),))

    @classmethod
    def from_dense(cls, dense: Iterable[int], indices: Iterable[int] | None = None) -> "Monomial":
        """Build from an exponent vector; ``indices`` names the variable of each slot."""
        dense = list(dense)
        if indices is None:
            indices = range(1, len(dense) + 1)
        return cls._raw(tuple((i, e) for i, e in zip(indices, dense) if e))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        return parse_monomial(text)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.exps)

    @property
    def max_index(self) -> int:
        return self.exps[-1][0] if self.exps else 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def exponent(self, index: int) -> int:
        for i, e in self.exps:
            if i == index:
                return e
            if i > index:
                break
        return 0

    def dense(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for i, e in self.exps:
            if i > n:
                raise ValueError(f"{self} is not supported on x1..x{n}")
            out[i - 1] = e
        return tuple(out)

    def is_one(self) -> bool:
        return not self.exps

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self.exps < other.exps

    def __le__(self, other: "Monomial") -> bool:
        return self.exps <= other.exps

    def __gt__(self, other: "Monomial") -> bool:
        return self.exps > other.exps

    def __ge__(self, other: "Monomial") -> bool:
        return self.exps >= other.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        d = dict(self.exps)
        for i, e in other.exps:
            d[i] = _check_small(d.get(i, 0) + e, "exponent")
        return Monomial._raw(tuple(sorted(d.items())))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return quotient_exact(self, other)

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.exps)

    def __repr__(self):
        return f"Monomial({str(self)!r})"


ONE = Monomial()


class _ZeroMarker:
    """The point adjoined to [X] by truncation; not a monomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __bool__(self):
        return False


ZERO = _ZeroMarker()


def divides(t: Monomial, m: Monomial) -> bool:
    if t.tdeg > m.tdeg:
        return False
    me = dict(m.exps)
    return all(me.get(i, 0) >= e for i, e in t.exps)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a.exps)
    for i, e in b.exps:
        if e > d.get(i, 0):
            d[i] = e
    return Monomial._raw(tuple(sorted(d.items())))


def lcm_all(ms: Iterable[Monomial]) -> Monomial:
    d: dict[int, int] = {}
    for m in ms:
        for i, e in m.exps:
            if e > d.get(i, 0):
                d[i] = e
    return Monomial._raw(tuple(sorted(d.items())))


def quotient_exact(m: Monomial, t: Monomial) -> Monomial:
    d = dict(m.exps)
    for i, e in t.exps:
        left = d.get(i, 0) - e
        if left < 0:
            raise NotDivisible(f"{t} does not divide {m}")
        if left:
            d[i] = left
        else:
            del d[i]
    return Monomial._raw(tuple(sorted(d.items())))


def truncate_monomial(m: Monomial, n: int):
    """Return ``m`` if it only involves x1..xn, otherwise ``ZERO``."""
    if n < 1:
        raise ValueError("n must be positive")
    return m if m.max_index <= n else ZERO


class Partition:
    """Assignment of every variable index to one of the classes 1..r.

    ``assign`` lists explicit ``index -> class`` pairs, every other index
    falls into ``default``.
    """

    __slots__ = ("r", "assign", "default")

    def __init__(self, r: int, assign: Mapping[int, int] | None = None, default: int = 1):
        if r < 1:
            raise ValueError("a partition needs at least one class")
        assign = dict(assign or {})
        for idx, cls in assign.items():
            if idx < 1:
                raise ValueError(f"variable index must be positive, got {idx}")
            if not 1 <= cls <= r:
                raise ClassOutOfRange(f"class {cls} for x{idx} is outside 1..{r}")
        if not 1 <= default <= r:
            raise ClassOutOfRange(f"default class {default} is outside 1..{r}")
        self.r = r
        self.assign = assign
        self.default = default

    @classmethod
    def total(cls) -> "Partition":
        return cls(1)

    @classmethod
    def parse(cls, spec: str) -> "Partition":
        return parse_partition(spec)

    def class_of(self, index: int) -> int:
        return self.assign.get(index, self.default)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.r, self.assign, self.default) == (other.r, other.assign, other.default)

    def __repr__(self):
        return f"Partition(r={self.r}, assign={self.assign!r}, default={self.default})"


def multi_degree(m: Monomial, y: Partition) -> tuple[int, ...]:
    vec = [0] * y.r
    for i, e in m.exps:
        vec[y.class_of(i) - 1] += e
    return tuple(vec)


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_monomial(text: str, line: int | None = None) -> Monomial:
    """Parse ``1`` or ``x1^2*x3``-style text. Whitespace is ignored."""
    # keep a column map so errors point into the original text
    cols = [k for k, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[k] for k in cols)

    def col(pos):
        return (cols[pos] if pos < len(cols) else len(text)) + 1

    if not s:
        raise ParseError("empty monomial", line, 1)
    if s == "1":
        return ONE
    pairs: dict[int, int] = {}
    pos = 0
    while True:
        match = _FACTOR.match(s, pos)
        if match is None:
            raise ParseError(f"expected factor like x3 or x3^2 at {s[pos:]!r}", line, col(pos))
        idx = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if idx < 1:
            raise ParseError("variable indices start at 1", line, col(pos))
        if exp < 1:
            raise ParseError("exponents must be at least 1", line, col(match.start(2)))
        if idx in pairs:
            raise ParseError(f"duplicate variable x{idx}", line, col(pos))
        if idx > MAX_SMALL or exp > MAX_SMALL:
            raise ParseError("index or exponent out of range", line, col(pos))
        pairs[idx] = exp
        pos = match.end()
        if pos == len(s):
            break
        if s[pos] != "*":
            raise ParseError(f"expected '*' at {s[pos:]!r}", line, col(pos))
        pos += 1
    return Monomial(sorted(pairs.items()))


def parse_partition(spec: str) -> Partition:
    """Parse ``total`` or ``r=<int>;default=<class>;<class>:<idx>,<idx>;...``."""
    spec = "".join(spec.split())
    if spec == "total":
        return Partition.total()
    fields = [f for f in spec.split(";") if f]
    if not fields or not fields[0].startswith("r="):
        raise ParseError("partition spec must start with r=<int> or be 'total'")
    try:
        r = int(fields[0][2:])
    except ValueError:
        raise ParseError(f"bad class count {fields[0][2:]!r}") from None
    if r < 1:
        raise ParseError("class count must be positive")
    default = 1
    assign: dict[int, int] = {}
    for field in fields[1:]:
        try:
            if field.startswith("default="):
                default = int(field[len("default="):])
                continue
            cls_text, _, idx_text = field.partition(":")
            cls = int(cls_text)
            for tok in idx_text.split(","):
                idx = int(tok)
                if idx < 1:
                    raise ParseError(f"variable index must be positive in {field!r}")
                if idx in assign and assign[idx] != cls:
                    raise ParseError(f"x{idx} assigned to two classes")
                assign[idx] = cls
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad partition field {field!r}") from None
    return Partition(r, assign, default)
