"""Koszul chains over S/I and the distinguished cycles attached to labels.

A chain in homological degree i is a rational combination of wedge basis
elements e_{k_1} ^ ... ^ e_{k_i} (k_1 < ... < k_i) with monomial residues
taken in S/I: terms whose residue lies in I are dropped on insertion.  The
differential sends e_tau to sum_l (-1)^(l+1) x_{k_l} e_{tau minus k_l},
again reducing residues mod I.

For a t-spread strongly stable ideal, each label (u, sigma) with u a minimal
generator and sigma inside [max(u)-1] minus the spread support of u carries
a distinguished cycle whose classes form a basis of the Koszul homology.
The cycle is built here both from its closed-form expansion (with the sign
parity recursion) and from the two-case recurrence on sigma; the two
constructions must agree, which the test suite checks term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .ideals import MonomialIdeal, admissible_shape, require_strongly_stable
from .monomials import (
    Monomial,
    SpreadVector,
    format_monomial,
    free_indices,
    is_spread,
    next_support_index,
)

WedgeIndex = tuple[int, ...]


def _sorted_wedge(seq: Iterable[int]) -> tuple[Optional[WedgeIndex], int]:
    """Sort wedge indices, tracking the transposition sign; repeats give None."""
    arr = list(seq)
    sign = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(arr, arr[1:]):
        if a == b:
            return None, 0
    return tuple(arr), sign


class KoszulChain:
    """A chain of K_i(x; S/I) with exact rational coefficients."""

    def __init__(self, ideal: MonomialIdeal, hom_degree: int):
        if hom_degree < 0:
            raise ValueError("homological degree must be non-negative")
        self.ideal = ideal
        self.hom_degree = hom_degree
        self._terms: dict[tuple[WedgeIndex, Monomial], Fraction] = {}

    # -- construction ------------------------------------------------------

    def add_term(self, wedge: Iterable[int], residue: Monomial, coeff) -> None:
        """Insert coeff * residue * e_wedge, canonicalizing the wedge.

        Wedges with repeated indices vanish; residues inside the ideal are
        reduced to zero; cancellations remove the slot.
        """
        coeff = Fraction(coeff)
        if coeff == 0:
            return
        tup, sign = _sorted_wedge(wedge)
        if tup is None:
            return
        if len(tup) != self.hom_degree:
            raise ValueError(
                f"wedge {tup} has length {len(tup)}, chain lives in degree "
                f"{self.hom_degree}")
        if tup and (tup[0] < 1 or tup[-1] > self.ideal.ambient_n):
            raise ValueError(f"wedge {tup} out of range for n={self.ideal.ambient_n}")
        if self.ideal.contains(residue):
            return
        key = (tup, residue)
        new = self._terms.get(key, Fraction(0)) + sign * coeff
        if new == 0:
            self._terms.pop(key, None)
        else:
            self._terms[key] = new

    def copy(self) -> "KoszulChain":
        dup = KoszulChain(self.ideal, self.hom_degree)
        dup._terms = dict(self._terms)
        return dup

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[WedgeIndex, Monomial, Fraction]]:
        """Terms sorted by descending wedge order (ascending index tuples)."""
        for (tup, mono), coeff in sorted(
                self._terms.items(), key=lambda kv: (kv[0][0], kv[0][1].indices)):
            yield tup, mono, coeff

    def coefficient(self, wedge: Iterable[int], residue: Monomial) -> Fraction:
        tup, sign = _sorted_wedge(wedge)
        if tup is None:
            return Fraction(0)
        return sign * self._terms.get((tup, residue), Fraction(0))

    def internal_degree(self) -> Optional[int]:
        """deg(residue) + |wedge|, which all terms must share."""
        degs = {m.degree + len(tup) for (tup, m) in self._terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"chain mixes internal degrees {sorted(degs)}")
        return degs.pop()

    def leading_term(self) -> tuple[WedgeIndex, Monomial, Fraction]:
        """The term with the largest wedge (smallest index tuple)."""
        if self.is_zero:
            raise ValueError("the zero chain has no leading term")
        key = min(self._terms, key=lambda k: (k[0], k[1].indices))
        return key[0], key[1], self._terms[key]

    # -- algebra -----------------------------------------------------------

    def add(self, other: "KoszulChain") -> "KoszulChain":
        if self.hom_degree != other.hom_degree:
            raise ValueError("cannot add chains of different homological degree")
        out = self.copy()
        for (tup, mono), coeff in other._terms.items():
            out.add_term(tup, mono, coeff)
        return out

    __add__ = add

    def scale(self, factor) -> "KoszulChain":
        factor = Fraction(factor)
        out = KoszulChain(self.ideal, self.hom_degree)
        if factor != 0:
            out._terms = {k: v * factor for k, v in self._terms.items()}
        return out

    def negate(self) -> "KoszulChain":
        return self.scale(-1)

    __neg__ = negate

    def __sub__(self, other: "KoszulChain") -> "KoszulChain":
        return self.add(other.negate())

    def wedge_var_right(self, k: int) -> "KoszulChain":
        """self ^ e_k."""
        out = KoszulChain(self.ideal, self.hom_degree + 1)
        for (tup, mono), coeff in self._terms.items():
            out.add_term(tup + (k,), mono, coeff)
        return out

    def wedge_var_left(self, k: int) -> "KoszulChain":
        """e_k ^ self."""
        out = KoszulChain(self.ideal, self.hom_degree + 1)
        for (tup, mono), coeff in self._terms.items():
            out.add_term((k,) + tup, mono, coeff)
        return out

    def wedge(self, other: "KoszulChain") -> "KoszulChain":
        out = KoszulChain(self.ideal, self.hom_degree + other.hom_degree)
        for (tup1, m1), c1 in self._terms.items():
            for (tup2, m2), c2 in other._terms.items():
                out.add_term(tup1 + tup2, m1.mul(m2), c1 * c2)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, KoszulChain):
            return NotImplemented
        return self.hom_degree == other.hom_degree and self._terms == other._terms

    def __hash__(self):
        raise TypeError("KoszulChain is unhashable")

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for tup, mono, coeff in self.terms():
            wedge = "^".join(f"e{k}" for k in tup)
            body = f"eps({format_monomial(mono)}) {wedge}"
            if coeff == 1:
                pieces.append(("+ " if pieces else "") + body)
            elif coeff == -1:
                pieces.append(("- " if pieces else "-") + body)
            else:
                sign = "- " if coeff < 0 else ("+ " if pieces else "")
                mag = abs(coeff)
                pieces.append(f"{sign}{mag}*{body}")
        return " ".join(pieces)

    __repr__ = __str__


def koszul_differential(chain: KoszulChain, j_start: int = 1) -> KoszulChain:
    """Apply the Koszul differential, reducing residues modulo the ideal.

    j_start names the first variable of the underlying sequence x_j,...,x_n;
    it only constrains which wedge indices may appear.
    """
    if chain.hom_degree == 0:
        raise ValueError("cannot differentiate a degree-0 chain")
    out = KoszulChain(chain.ideal, chain.hom_degree - 1)
    for (tup, mono), coeff in chain._terms.items():
        if tup and tup[0] < j_start:
            raise ValueError(f"wedge {tup} uses indices below x{j_start}")
        for pos, k in enumerate(tup):
            sign = -1 if pos % 2 else 1
            out.add_term(tup[:pos] + tup[pos + 1:], mono.times_var(k), sign * coeff)
    return out


# -- labels ------------------------------------------------------------------


@dataclass(frozen=True)
class CycleLabel:
    """A pair (u, sigma): a minimal generator and an admissible index set."""

    generator: Monomial
    sigma: tuple[int, ...]

    @property
    def hom_degree(self) -> int:
        return len(self.sigma) + 1

    @property
    def internal_degree(self) -> int:
        return self.generator.degree + len(self.sigma)

    def multidegree(self) -> tuple[int, ...]:
        exps = list(self.generator.exponents)
        for k in self.sigma:
            exps[k - 1] += 1
        return tuple(exps)

    def __str__(self) -> str:
        body = ",".join(str(k) for k in self.sigma)
        return f"({format_monomial(self.generator)}; {{{body}}})"


def homology_basis_labels(ideal: MonomialIdeal, t, hom_degree: int) -> list[CycleLabel]:
    """All labels (u, sigma) with |sigma| = hom_degree - 1.

    Ordered by generator (descending plex, the stored order) and then by
    descending wedge order on sigma.
    """
    t = SpreadVector.coerce(t)
    require_strongly_stable(ideal, t)
    if hom_degree < 1:
        raise ValueError("homological degree must be at least 1")
    labels = []
    for g in ideal.generators:
        allowed = free_indices(g, t)
        for sigma in combinations(allowed, hom_degree - 1):
            labels.append(CycleLabel(g, sigma))
    return labels


def _validate_label(ideal: MonomialIdeal, t: SpreadVector, u: Monomial,
                    sigma: tuple[int, ...]) -> tuple[int, ...]:
    if not any(g.indices == u.indices for g in ideal.generators):
        raise ValueError(f"{u} is not a minimal generator of the ideal")
    sigma = tuple(sorted(set(sigma)))
    allowed = set(free_indices(u, t))
    stray = [k for k in sigma if k not in allowed]
    if stray:
        raise ValueError(
            f"sigma indices {stray} are not admissible for {u}: allowed "
            f"{sorted(allowed)}")
    return sigma


# -- sign parity --------------------------------------------------------------


def cycle_sign_parity(u: Monomial, sigma, subset) -> int:
    """Parity (0 or 1) of the sign exponent attached to a subset of sigma.

    Recursion on the largest element of sigma: removing it when absent from
    the subset costs |subset|; when present, the whole group of sigma
    elements sharing its successor support index collapses at once.
    """
    sigma = tuple(sorted(sigma))
    chosen = frozenset(subset)
    if not chosen <= set(sigma):
        raise ValueError(f"subset {sorted(chosen)} not contained in sigma {sigma}")

    def rec(sig: tuple[int, ...], F: frozenset[int]) -> int:
        if not F:
            return 0
        top = sig[-1]
        if top not in F:
            return (rec(sig[:-1], F) + len(F)) % 2
        j_top = next_support_index(u, top)
        group = tuple(k for k in sig if next_support_index(u, k) == j_top)
        sig2 = tuple(k for k in sig if k not in group)
        F2 = frozenset(k for k in F if k not in group)
        return (rec(sig2, F2) + (len(group) - 1) * (len(F) + 1) + 1) % 2

    return rec(sigma, chosen)


# -- cycles -------------------------------------------------------------------


def _direct_cycle(ideal: MonomialIdeal, u: Monomial,
                  sigma: tuple[int, ...],
                  keep=lambda F: True) -> KoszulChain:
    """Closed-form expansion over subsets F of sigma (u any t-spread member)."""
    chain = KoszulChain(ideal, len(sigma) + 1)
    max_u = u.max_index
    u_prime = u.over_var(max_u)
    succ = {k: next_support_index(u, k) for k in sigma}
    m = len(sigma)
    for mask in range(1 << m):
        F = tuple(sigma[p] for p in range(m) if mask >> p & 1)
        if not keep(F):
            continue
        rest = [sigma[p] for p in range(m) if not (mask >> p & 1)]
        wedge_seq = rest + [succ[k] for k in F] + [max_u]
        tup, sign = _sorted_wedge(wedge_seq)
        if tup is None:
            continue
        # with a repeat-free wedge the successor product always divides u'
        residue_idx = list(u_prime.indices)
        for k in F:
            residue_idx.remove(succ[k])
        residue = Monomial(sorted(residue_idx + list(F)), u.ambient_n)
        if ideal.contains(residue):
            continue
        parity = cycle_sign_parity(u, sigma, F)
        chain.add_term(tup, residue, -sign if parity else sign)
    return chain


def koszul_cycle(ideal: MonomialIdeal, t, u: Monomial, sigma) -> KoszulChain:
    """The distinguished cycle of the label (u, sigma), by its expansion."""
    t = SpreadVector.coerce(t)
    sigma = _validate_label(ideal, t, u, tuple(sigma))
    return _direct_cycle(ideal, u, sigma)


def _recursive_cycle(ideal: MonomialIdeal, t: SpreadVector, u: Monomial,
                     sigma: tuple[int, ...]) -> KoszulChain:
    if not sigma:
        chain = KoszulChain(ideal, 1)
        chain.add_term((u.max_index,), u.over_var(u.max_index), 1)
        return chain
    k_top = sigma[-1]
    j_top = next_support_index(u, k_top)
    head = _recursive_cycle(ideal, t, u, sigma[:-1]).wedge_var_right(k_top).negate()
    if j_top == u.max_index:
        return head
    v = u.over_var(j_top).times_var(k_top)
    assert is_spread(v, t), f"exchange {v} left the spread class"
    first = min(p for p, k in enumerate(sigma)
                if next_support_index(u, k) == j_top)
    tail = _recursive_cycle(ideal, t, v, sigma[:first])
    for k in sigma[first:-1]:
        tail = tail.wedge_var_right(k)
    tail = tail.wedge_var_right(j_top)
    if (len(sigma) - first - 1) % 2:
        tail = tail.negate()
    return head.add(tail)


def koszul_cycle_recursive(ideal: MonomialIdeal, t, u: Monomial, sigma) -> KoszulChain:
    """The same cycle, assembled by the recurrence on the last sigma index."""
    t = SpreadVector.coerce(t)
    sigma = _validate_label(ideal, t, u, tuple(sigma))
    return _recursive_cycle(ideal, t, u, sigma)


def simple_cycle(ideal: MonomialIdeal, t, u: Monomial, sigma) -> KoszulChain:
    """eps(u / x_max) e_sigma ^ e_max; a cycle for spreads (1,..,1,0,..,0)."""
    t = SpreadVector.coerce(t)
    if not admissible_shape(t):
        raise ValueError(
            f"simple cycles need a spread vector shaped (1,..,1,0,..,0), got {t}")
    sigma = _validate_label(ideal, t, u, tuple(sigma))
    chain = KoszulChain(ideal, len(sigma) + 1)
    chain.add_term(sigma + (u.max_index,), u.over_var(u.max_index), 1)
    return chain


def remainder_split(ideal: MonomialIdeal, t, u: Monomial, sigma
                    ) -> tuple[KoszulChain, KoszulChain]:
    """Split the cycle as e_{k_1} ^ e(u; sigma minus k_1) plus a remainder.

    The remainder collects exactly the expansion terms whose subset contains
    the smallest sigma index, so no wedge in it involves e_{k_1}.
    """
    t = SpreadVector.coerce(t)
    sigma = _validate_label(ideal, t, u, tuple(sigma))
    if not sigma:
        raise ValueError("sigma must be non-empty to split")
    k1 = sigma[0]
    head = _direct_cycle(ideal, u, sigma[1:]).wedge_var_left(k1)
    rest = _direct_cycle(ideal, u, sigma, keep=lambda F: k1 in F)
    return head, rest
