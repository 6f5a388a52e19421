"""Monomial ideals generated by t-spread monomials.

Membership, minimal generators, the stable / strongly stable / lex-segment
predicates (checked degreewise on U_l = I intersect M_{n,l,t}), strongly
stable closures, standard factorizations, decomposition functions, and exact
Hilbert function counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from .monomials import (
    Monomial,
    SpreadVector,
    format_monomial,
    is_spread,
    parse_monomial,
    plex_key,
    spread_monomials,
    unit,
)


class MonomialIdeal:
    """A monomial ideal held by its minimal generators.

    Generators are stored in descending plex order.  Equality and hashing
    compare the generator index data only; the ambient size is contextual.
    Instances are immutable by convention.
    """

    def __init__(self, generators: Iterable[Monomial], ambient_n: int,
                 spread_type: Optional[SpreadVector] = None):
        gens = tuple(sorted(generators, key=plex_key, reverse=True))
        for g in gens:
            if g.max_index > ambient_n and not g.is_unit:
                raise ValueError(f"generator {g} exceeds ambient n={ambient_n}")
        # normalize every generator to the ideal's own ambient
        gens = tuple(Monomial(g.indices, ambient_n) for g in gens)
        for i, g in enumerate(gens):
            for h in gens[:i] + gens[i + 1:]:
                if h.divides(g):
                    raise ValueError(
                        f"generator set is not minimal: {h} divides {g}")
        self.generators = gens
        self.ambient_n = ambient_n
        self.spread_type = SpreadVector.coerce(spread_type) if spread_type is not None else None
        self._member_cache: dict[tuple[int, ...], bool] = {}
        # separate cache: exponent vectors and index tuples can collide as keys
        self._exp_cache: dict[tuple[int, ...], bool] = {}
        self._gen_exps = [g.exponents for g in gens]

    @classmethod
    def from_generators(cls, generators: Iterable[Monomial], ambient_n: int,
                        spread_type=None) -> "MonomialIdeal":
        t = SpreadVector.coerce(spread_type) if spread_type is not None else None
        return cls(minimalize(generators), ambient_n, t)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls((), n)

    @classmethod
    def unit_ideal(cls, n: int) -> "MonomialIdeal":
        return cls((unit(n),), n)

    # -- membership --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit

    def contains(self, w: Monomial) -> bool:
        key = w.indices
        hit = self._member_cache.get(key)
        if hit is None:
            hit = any(g.divides(w) for g in self.generators)
            self._member_cache[key] = hit
        return hit

    def contains_exponents(self, exps: tuple[int, ...]) -> bool:
        """Membership test on a raw exponent vector of length ambient_n."""
        hit = self._exp_cache.get(exps)
        if hit is not None:
            return hit
        result = False
        for ge in self._gen_exps:
            for a, b in zip(ge, exps):
                if a > b:
                    break
            else:
                result = True
                break
        self._exp_cache[exps] = result
        return result

    def degreewise_members(self, t, degree: int) -> list[Monomial]:
        """U_degree = members of the ideal among t-spread monomials."""
        return [m for m in spread_monomials(self.ambient_n, degree, t)
                if self.contains(m)]

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(any(g.divides(h) for g in self.generators)
                   for h in other.generators)

    def with_ambient(self, n: int) -> "MonomialIdeal":
        """The same generators, read in K[x_1..x_n]."""
        needed = max((g.max_index for g in self.generators if not g.is_unit),
                     default=1)
        if n < needed:
            raise ValueError(f"ambient {n} too small for generators up to x{needed}")
        return MonomialIdeal((Monomial(g.indices, n) for g in self.generators),
                             n, self.spread_type)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (frozenset(g.indices for g in self.generators)
                == frozenset(g.indices for g in other.generators))

    def __hash__(self) -> int:
        return hash(frozenset(g.indices for g in self.generators))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"MonomialIdeal(({gens}), n={self.ambient_n})"


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal elements, in descending plex order."""
    pool = sorted(set(monomials), key=lambda m: (m.degree, plex_key(m)))
    kept: list[Monomial] = []
    for m in pool:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    kept.sort(key=plex_key, reverse=True)
    return kept


# -- spread ideal classes ---------------------------------------------------


@dataclass(frozen=True)
class ExchangeViolation:
    """A move x_j * (u / x_i) that leaves the ideal (or the degree set)."""

    monomial: Monomial
    removed: int
    inserted: int

    def moved(self) -> Monomial:
        return self.monomial.over_var(self.removed).times_var(self.inserted)

    def __str__(self) -> str:
        w = self.moved()
        return (f"x{self.inserted}*({format_monomial(self.monomial)}/"
                f"x{self.removed}) = {format_monomial(w)} not in ideal")


@dataclass(frozen=True)
class SegmentViolation:
    """A lex-larger t-spread monomial missing from a degree slice."""

    member: Monomial
    missing: Monomial

    def __str__(self) -> str:
        return (f"{format_monomial(self.missing)} >lex "
                f"{format_monomial(self.member)} but is not in the ideal")


def _check_spread_generators(ideal: MonomialIdeal, t: SpreadVector) -> None:
    for g in ideal.generators:
        if not is_spread(g, t):
            raise ValueError(f"generator {g} is not {t}-spread")


def stable_violation(ideal: MonomialIdeal, t) -> Optional[ExchangeViolation]:
    """Degreewise: exchanges at the last index must stay inside each U_l."""
    t = SpreadVector.coerce(t)
    _check_spread_generators(ideal, t)
    for degree in range(1, t.d + 1):
        members = ideal.degreewise_members(t, degree)
        member_set = set(members)
        for u in members:
            i = u.max_index
            base = u.over_var(i)
            for j in range(1, i):
                w = base.times_var(j)
                if is_spread(w, t) and w not in member_set:
                    return ExchangeViolation(u, i, j)
    return None


def strongly_stable_violation(ideal: MonomialIdeal, t) -> Optional[ExchangeViolation]:
    """Generator criterion: every spread exchange on a generator stays in I."""
    t = SpreadVector.coerce(t)
    _check_spread_generators(ideal, t)
    for u in ideal.generators:
        for i in u.support:
            base = u.over_var(i)
            for j in range(1, i):
                w = base.times_var(j)
                if is_spread(w, t) and not ideal.contains(w):
                    return ExchangeViolation(u, i, j)
    return None


def lex_violation(ideal: MonomialIdeal, t) -> Optional[SegmentViolation]:
    """Each U_l must be an upper interval of the lex order on M_{n,l,t}."""
    t = SpreadVector.coerce(t)
    _check_spread_generators(ideal, t)
    for degree in range(1, t.d + 1):
        slice_ = spread_monomials(ideal.ambient_n, degree, t)
        last_member = None
        for m in reversed(slice_):  # ascending lex
            if ideal.contains(m):
                last_member = m
            elif last_member is not None:
                return SegmentViolation(last_member, m)
    return None


def is_stable(ideal: MonomialIdeal, t) -> bool:
    return stable_violation(ideal, t) is None


def is_strongly_stable(ideal: MonomialIdeal, t) -> bool:
    return strongly_stable_violation(ideal, t) is None


def is_lex_segment(ideal: MonomialIdeal, t) -> bool:
    return lex_violation(ideal, t) is None


def require_strongly_stable(ideal: MonomialIdeal, t) -> None:
    violation = strongly_stable_violation(ideal, t)
    if violation is not None:
        raise ValueError(f"ideal is not strongly stable: {violation}")


def strongly_stable_closure(monomials: Iterable[Monomial], t,
                            ambient_n: Optional[int] = None) -> MonomialIdeal:
    """Smallest t-spread strongly stable ideal containing the given monomials.

    Exchange moves preserve degree, so the closure is a fixpoint computation
    inside the finitely many t-spread monomials of the input degrees.
    """
    t = SpreadVector.coerce(t)
    seeds = list(monomials)
    for m in seeds:
        if not is_spread(m, t):
            raise ValueError(f"{m} is not {t}-spread")
    if ambient_n is None:
        ambient_n = max((m.ambient_n for m in seeds), default=1)
    closed: set[Monomial] = set()
    frontier = list(seeds)
    while frontier:
        u = frontier.pop()
        if u in closed:
            continue
        closed.add(u)
        for i in u.support:
            base = u.over_var(i)
            for j in range(1, i):
                w = base.times_var(j)
                if is_spread(w, t) and w not in closed:
                    frontier.append(w)
    return MonomialIdeal.from_generators(closed, ambient_n, t)


# -- standard factorization -------------------------------------------------


def standard_factorization(ideal: MonomialIdeal, t, w: Monomial) -> tuple[Monomial, Monomial]:
    """Split w in I as u*v with u a minimal generator and max(u) <= min(v).

    The generator is cut from the leading indices of w at the smallest degree
    of any generator dividing w; for strongly stable ideals this is the
    unique such splitting.
    """
    t = SpreadVector.coerce(t)
    if not is_spread(w, t):
        raise ValueError(f"{w} is not {t}-spread")
    if not ideal.contains(w):
        raise ValueError(f"{w} is not in the ideal")
    require_strongly_stable(ideal, t)
    cut = min(g.degree for g in ideal.generators if g.divides(w))
    u = Monomial(w.indices[:cut], w.ambient_n)
    v = Monomial(w.indices[cut:], w.ambient_n)
    if not any(g.indices == u.indices for g in ideal.generators):
        raise AssertionError(f"leading factor {u} of {w} is not a generator")
    return u, v


def admissible_shape(t) -> bool:
    """True for spread vectors of the form (1,...,1,0,...,0)."""
    entries = SpreadVector.coerce(t).entries
    if any(e not in (0, 1) for e in entries):
        return False
    return all(a >= b for a, b in zip(entries, entries[1:]))


def decomposition_function(ideal: MonomialIdeal, t, w: Monomial) -> Monomial:
    """The plex-largest minimal generator dividing w.

    Defined for spread vectors shaped (1,...,1,0,...,0), where it realizes
    the standard splitting used by the resolution differential.
    """
    t = SpreadVector.coerce(t)
    if not admissible_shape(t):
        raise ValueError(f"spread vector {t} is not of the form (1,..,1,0,..,0)")
    if not ideal.contains(w):
        raise ValueError(f"{w} is not in the ideal")
    divisors = [g for g in ideal.generators if g.divides(w)]
    return max(divisors, key=plex_key)


# -- Hilbert function -------------------------------------------------------


def hilbert_function(ideal: MonomialIdeal, max_degree: int) -> list[int]:
    """dim_K (S/I)_q for q = 0..max_degree, by direct monomial counting.

    Counts degree-q monomials outside the ideal with a DFS over exponent
    vectors, pruning whole subtrees once some generator is forced to divide
    (or can no longer divide) every completion.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    n = ideal.ambient_n
    counts = [0] * (max_degree + 1)
    gens = [g.exponents for g in ideal.generators]

    def free_count(assigned: int, degree: int) -> None:
        # no generator can divide any completion: count the whole subtree
        rest = n - assigned
        if rest == 0:
            counts[degree] += 1
            return
        for r in range(max_degree - degree + 1):
            counts[degree + r] += comb(r + rest - 1, rest - 1)

    def walk(var: int, alive: list[tuple[int, ...]], degree: int) -> None:
        if not alive:
            free_count(var, degree)
            return
        if var == n:
            counts[degree] += 1
            return
        for e in range(max_degree - degree + 1):
            nxt = []
            dominated = False
            for g in alive:
                if g[var] > e:
                    continue  # this branch kills g for good
                if max((i for i in range(var + 1, n) if g[i] > 0), default=-1) < 0:
                    dominated = True
                    break
                nxt.append(g)
            if not dominated:
                walk(var + 1, nxt, degree + e)

    walk(0, gens, 0)
    return counts


# -- serialization ----------------------------------------------------------


def ideal_to_dict(ideal: MonomialIdeal, t=None) -> dict:
    t = SpreadVector.coerce(t) if t is not None else ideal.spread_type
    payload = {
        "n": ideal.ambient_n,
        "t": list(t.entries) if t is not None else [],
        "generators": [format_monomial(g) for g in ideal.generators],
    }
    return payload


def ideal_from_dict(payload: dict) -> tuple[MonomialIdeal, Optional[SpreadVector]]:
    try:
        n = payload["n"]
        raw_t = payload["t"]
        raw_gens = payload["generators"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"ideal record must have n, t, generators: {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"invalid ambient size {n!r}")
    t = SpreadVector(tuple(raw_t)) if raw_t else None
    gens = [parse_monomial(s, n) for s in raw_gens]
    ideal = MonomialIdeal.from_generators(gens, n, t)
    return ideal, t
