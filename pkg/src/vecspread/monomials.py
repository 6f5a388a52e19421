"""Monomials as weakly increasing index sequences, with spread combinatorics.

A monomial x_{j_1} x_{j_2} ... x_{j_l} (j_1 <= ... <= j_l) is stored as its
index tuple together with the ambient number of variables n.  The unit
monomial has the empty tuple; by convention its min and max index are both n.

A spread vector t = (t_1, ..., t_{d-1}) of non-negative integers bounds the
degrees under consideration by d and prescribes minimal gaps between
consecutive indices: u is t-spread when j_{i+1} - j_i >= t_i for every i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from math import comb
from typing import Iterable, Iterator


class Monomial:
    """Immutable monomial of K[x_1..x_n].

    Equality and hashing use the index sequence only; the ambient size is
    contextual (spread maps routinely move monomials between ambients).
    """

    __slots__ = ("indices", "ambient_n", "_hash")

    def __init__(self, indices: Iterable[int], ambient_n: int):
        idx = tuple(indices)
        if ambient_n < 1:
            raise ValueError(f"ambient size must be >= 1, got {ambient_n}")
        for a, b in zip(idx, idx[1:]):
            if a > b:
                raise ValueError(f"indices must be weakly increasing, got {idx}")
        if idx and (idx[0] < 1 or idx[-1] > ambient_n):
            raise ValueError(f"indices {idx} out of range for n={ambient_n}")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "ambient_n", ambient_n)
        object.__setattr__(self, "_hash", hash(idx))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.indices)

    @property
    def is_unit(self) -> bool:
        return not self.indices

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.indices)))

    @property
    def max_index(self) -> int:
        # min(1) = max(1) = n by convention
        return self.indices[-1] if self.indices else self.ambient_n

    @property
    def min_index(self) -> int:
        return self.indices[0] if self.indices else self.ambient_n

    @property
    def exponents(self) -> tuple[int, ...]:
        exps = [0] * self.ambient_n
        for j in self.indices:
            exps[j - 1] += 1
        return tuple(exps)

    def exponent_of(self, k: int) -> int:
        return self.indices.count(k)

    # -- arithmetic --------------------------------------------------------

    def mul(self, other: "Monomial") -> "Monomial":
        if self.ambient_n != other.ambient_n:
            raise ValueError("cannot multiply monomials with different ambients")
        merged = sorted(self.indices + other.indices)
        return Monomial(merged, self.ambient_n)

    __mul__ = mul

    def times_var(self, k: int) -> "Monomial":
        return Monomial(sorted(self.indices + (k,)), self.ambient_n)

    def over_var(self, k: int) -> "Monomial":
        """Divide by x_k (one copy); k must occur."""
        idx = list(self.indices)
        try:
            idx.remove(k)
        except ValueError:
            raise ValueError(f"x{k} does not divide {self}") from None
        return Monomial(idx, self.ambient_n)

    def divides(self, other: "Monomial") -> bool:
        if self.degree > other.degree:
            return False
        # two-pointer walk over both sorted index tuples
        i = 0
        for j in other.indices:
            if i < len(self.indices) and self.indices[i] == j:
                i += 1
            elif i < len(self.indices) and self.indices[i] < j:
                return False
        return i == len(self.indices)

    def divide(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other."""
        if self.ambient_n != other.ambient_n:
            raise ValueError("cannot divide monomials with different ambients")
        idx = list(self.indices)
        for k in other.indices:
            try:
                idx.remove(k)
            except ValueError:
                raise ValueError(f"{other} does not divide {self}") from None
        return Monomial(idx, self.ambient_n)

    __truediv__ = divide

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.indices == other.indices

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({self.indices}, n={self.ambient_n})"


def monomial(indices: Iterable[int], n: int) -> Monomial:
    """Build a monomial from indices in any order."""
    return Monomial(sorted(indices), n)


def unit(n: int) -> Monomial:
    return Monomial((), n)


def variable(k: int, n: int) -> Monomial:
    return Monomial((k,), n)


# -- textual form ----------------------------------------------------------

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_monomial(m: Monomial) -> str:
    """Render as x<k> / x<k>^<e> factors joined by '*'; the unit is '1'."""
    if m.is_unit:
        return "1"
    parts = []
    seen: dict[int, int] = {}
    for j in m.indices:
        seen[j] = seen.get(j, 0) + 1
    for j in sorted(seen):
        e = seen[j]
        parts.append(f"x{j}" if e == 1 else f"x{j}^{e}")
    return "*".join(parts)


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse the x<k>[^<e>] grammar; '1' denotes the unit monomial."""
    s = text.strip()
    if s == "1":
        return unit(n)
    indices: list[int] = []
    for factor in s.split("*"):
        factor = factor.strip()
        match = _FACTOR_RE.match(factor)
        if match is None:
            raise ValueError(f"cannot parse monomial factor {factor!r} in {text!r}")
        k = int(match.group(1))
        e = int(match.group(2)) if match.group(2) else 1
        if k < 1:
            raise ValueError(f"variable index must be >= 1 in {factor!r}")
        if e < 1:
            raise ValueError(f"exponent must be >= 1 in {factor!r}")
        if k > n:
            raise ValueError(f"variable x{k} exceeds ambient n={n}")
        indices.extend([k] * e)
    return Monomial(sorted(indices), n)


# -- monomial orders -------------------------------------------------------
#
# lex and plex both compare exponent vectors left to right (largest exponent
# at the first difference wins); they agree everywhere and in particular on
# monomials of equal degree, which is where lex segments are read.  degrevlex
# compares total degree first, then breaks ties reverse-lexicographically.


def plex_key(m: Monomial):
    return m.exponents


def lex_key(m: Monomial):
    return m.exponents


def degrevlex_key(m: Monomial):
    return (m.degree, tuple(-e for e in reversed(m.exponents)))


_ORDER_KEYS = {"lex": lex_key, "plex": plex_key, "degrevlex": degrevlex_key}


def compare(u: Monomial, v: Monomial, order: str = "lex") -> int:
    """Return 1, 0, -1 as u >, =, < v in the named order."""
    if u.ambient_n != v.ambient_n:
        raise ValueError(
            f"cannot compare monomials with ambients {u.ambient_n} and {v.ambient_n}"
        )
    try:
        key = _ORDER_KEYS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None
    a, b = key(u), key(v)
    return (a > b) - (a < b)


# -- spread vectors --------------------------------------------------------


@dataclass(frozen=True)
class SpreadVector:
    """Gap thresholds t = (t_1, ..., t_{d-1}); bounds usable degrees by d."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 1:
            raise ValueError("spread vector needs at least one entry (d >= 2)")
        if any(e < 0 for e in entries):
            raise ValueError(f"spread entries must be non-negative, got {entries}")

    @property
    def d(self) -> int:
        return len(self.entries) + 1

    @classmethod
    def coerce(cls, t) -> "SpreadVector":
        if isinstance(t, SpreadVector):
            return t
        return cls(tuple(t))

    @classmethod
    def zero(cls, d: int) -> "SpreadVector":
        return cls((0,) * (d - 1))

    @classmethod
    def uniform(cls, value: int, d: int) -> "SpreadVector":
        return cls((value,) * (d - 1))

    def prefix_sum(self, k: int) -> int:
        """Sum of the first k entries."""
        if k < 0:
            raise ValueError("prefix length must be non-negative")
        return sum(self.entries[:k])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def spread(*entries: int) -> SpreadVector:
    return SpreadVector(tuple(entries))


# -- spread predicates -----------------------------------------------------


def is_spread(m: Monomial, t) -> bool:
    """True when deg(m) <= d and consecutive index gaps meet the thresholds.

    The unit and all variables are spread for every t.  Monomials of degree
    above d are simply not t-spread (no error).
    """
    t = SpreadVector.coerce(t)
    if m.degree > t.d:
        return False
    idx = m.indices
    return all(idx[i + 1] - idx[i] >= t.entries[i] for i in range(len(idx) - 1))


def spread_support(m: Monomial, t) -> frozenset[int]:
    """Union of the intervals [j_i, j_i + t_i - 1] over i < deg(m).

    Entries t_i = 0 contribute empty intervals; the last index contributes
    nothing.  Requires m to be t-spread.
    """
    t = SpreadVector.coerce(t)
    if not is_spread(m, t):
        raise ValueError(f"{m} is not {t}-spread")
    covered: set[int] = set()
    idx = m.indices
    for i in range(len(idx) - 1):
        covered.update(range(idx[i], idx[i] + t.entries[i]))
    return frozenset(covered)


def next_support_index(m: Monomial, k: int) -> int:
    """Smallest support index of m strictly above k; needs k < max(m)."""
    if m.is_unit:
        raise ValueError("the unit monomial has no support")
    if k >= m.max_index:
        raise ValueError(f"no support index of {m} exceeds {k}")
    return min(j for j in m.support if j > k)


def free_indices(m: Monomial, t) -> tuple[int, ...]:
    """Sorted elements of [max(m)-1] not covered by the t-spread support."""
    covered = spread_support(m, t)
    return tuple(k for k in range(1, m.max_index) if k not in covered)


# -- enumeration -----------------------------------------------------------


def count_spread_monomials(n: int, degree: int, t) -> int:
    """Number of t-spread monomials of the given degree in n variables."""
    t = SpreadVector.coerce(t)
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree > t.d:
        raise ValueError(f"degree {degree} exceeds the spread bound d={t.d}")
    if degree == 0:
        return 1
    top = n + (degree - 1) - t.prefix_sum(degree - 1)
    if top < degree:
        return 0
    return comb(top, degree)


def iter_spread_monomials(n: int, degree: int, t) -> Iterator[Monomial]:
    t = SpreadVector.coerce(t)
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree > t.d:
        raise ValueError(f"degree {degree} exceeds the spread bound d={t.d}")
    if degree == 0:
        yield unit(n)
        return

    idx = [0] * degree

    def rec(pos: int, lo: int) -> Iterator[Monomial]:
        if pos == degree:
            yield Monomial(tuple(idx), n)
            return
        for j in range(lo, n + 1):
            idx[pos] = j
            yield from rec(pos + 1, j + t.entries[pos] if pos < degree - 1 else j)

    yield from rec(0, 1)


def spread_monomials(n: int, degree: int, t) -> list[Monomial]:
    """All t-spread monomials of the given degree, in descending lex order.

    Ascending order of index tuples is descending lex order of monomials, so
    the recursion needs no sort.
    """
    return list(iter_spread_monomials(n, degree, t))


def prefix_sums(t: SpreadVector) -> tuple[int, ...]:
    """(0, t_1, t_1+t_2, ...) with d entries."""
    return (0,) + tuple(accumulate(t.entries))
