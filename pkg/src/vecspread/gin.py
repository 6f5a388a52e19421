"""Generic initial ideals (degrevlex, characteristic zero) and spread shifting.

Genericity is sampled, not certified: generators are pushed through a random
integer coordinate change (exact determinant check), a reduced Groebner basis
is computed over the rationals, and the leading terms are read off.  Two
independent runs must agree, and the result must be strongly stable in the
classical (0-spread) sense; otherwise the coefficient bound doubles and the
whole procedure retries before giving up.

Shifting composes this with a spread operator: the t-shift of I is the image
of Gin(I) under the map that re-spaces 0-spread monomials into t-spread ones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .ideals import MonomialIdeal, hilbert_function, is_strongly_stable
from .linalg import determinant_int
from .monomials import Monomial, SpreadVector
from .spreadmaps import SpreadMap, apply_spread_map_ideal

Exps = tuple[int, ...]
Poly = dict[Exps, Fraction]


class GenericityError(RuntimeError):
    """Raised when repeated random coordinate changes never agree."""


# -- polynomial arithmetic on exponent dictionaries ---------------------------


def _drl_key(e: Exps):
    return (sum(e), tuple(-x for x in reversed(e)))


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        new = out.get(e, Fraction(0)) + c
        if new == 0:
            out.pop(e, None)
        else:
            out[e] = new
    return out


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            new = out.get(e, Fraction(0)) + c1 * c2
            if new == 0:
                out.pop(e, None)
            else:
                out[e] = new
    return out


def _leading(p: Poly) -> Exps:
    return max(p, key=_drl_key)


def _monic(p: Poly) -> Poly:
    lead = p[_leading(p)]
    return {e: c / lead for e, c in p.items()}


def _divides_exps(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def normal_form(p: Poly, basis: Sequence[tuple[Exps, Poly]]) -> Poly:
    """Fully reduce p modulo the basis (list of (leading exponent, poly))."""
    out: Poly = {}
    work = dict(p)
    while work:
        e = max(work, key=_drl_key)
        c = work.pop(e)
        hit = None
        for lt, g in basis:
            if _divides_exps(lt, e):
                hit = (lt, g)
                break
        if hit is None:
            out[e] = c
            continue
        lt, g = hit
        shift = tuple(a - b for a, b in zip(e, lt))
        factor = c / g[lt]
        for e2, c2 in g.items():
            if e2 == lt:
                continue
            key = tuple(a + b for a, b in zip(e2, shift))
            new = work.get(key, Fraction(0)) - factor * c2
            if new == 0:
                work.pop(key, None)
            else:
                work[key] = new
    return out


def buchberger(polys: Iterable[Poly]) -> list[Poly]:
    """Reduced Groebner basis under degrevlex, exact coefficients.

    Normal selection strategy, with the coprimality and chain criteria to
    discard useless S-pairs.  Monomial inputs pass straight through to their
    minimal generators.
    """
    basis: list[tuple[Exps, Poly]] = []
    for p in polys:
        if p:
            p = _monic(p)
            basis.append((_leading(p), p))

    def lcm(a: Exps, b: Exps) -> Exps:
        return tuple(max(x, y) for x, y in zip(a, b))

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: _drl_key(lcm(basis[ij[0]][0],
                                                      basis[ij[1]][0])))
        pairs.discard((i, j))
        lt_i, lt_j = basis[i][0], basis[j][0]
        degs = lcm(lt_i, lt_j)
        if all(x + y == z for x, y, z in zip(lt_i, lt_j, degs)):
            continue  # coprime leading terms reduce to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides_exps(basis[k][0], degs) and \
                    (min(i, k), max(i, k)) not in pairs and \
                    (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        p_i, p_j = basis[i][1], basis[j][1]
        left = {tuple(a + d - b for a, b, d in zip(e, lt_i, degs)): c
                for e, c in p_i.items()}
        right = {tuple(a + d - b for a, b, d in zip(e, lt_j, degs)): c
                 for e, c in p_j.items()}
        s = poly_add(left, {e: -c for e, c in right.items()})
        r = normal_form(s, basis)
        if r:
            r = _monic(r)
            new = len(basis)
            basis.append((_leading(r), r))
            pairs.update((k, new) for k in range(new))

    # interreduce: drop redundant leading terms, then tail-reduce
    keep = []
    for idx, (lt, g) in enumerate(basis):
        if any(_divides_exps(lt2, lt) for k2, (lt2, _) in enumerate(basis)
               if k2 != idx and (k2 < idx or lt2 != lt)):
            continue
        keep.append((lt, g))
    reduced = []
    for idx, (lt, g) in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        r = normal_form(g, others)
        if r:
            reduced.append(_monic(r))
    reduced.sort(key=lambda p: _drl_key(_leading(p)))
    return reduced


def initial_ideal(polys: Iterable[Poly], n: int) -> MonomialIdeal:
    """Degrevlex initial ideal of the ideal generated by the polynomials."""
    gb = buchberger(polys)
    gens = []
    for p in gb:
        exps = _leading(p)
        indices = [k + 1 for k, e in enumerate(exps) for _ in range(e)]
        gens.append(Monomial(indices, n))
    if not gens:
        return MonomialIdeal.zero(n)
    return MonomialIdeal.from_generators(gens, n)


# -- generic coordinates -------------------------------------------------------


@dataclass(frozen=True)
class CoordinateChange:
    """An invertible integer matrix acting on variables by x_j -> sum_k A[j][k] x_k."""

    matrix: tuple[tuple[int, ...], ...]
    bound: int

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("coordinate change must be square")
        if determinant_int(self.matrix) == 0:
            raise ValueError("coordinate change must be invertible")

    @property
    def n(self) -> int:
        return len(self.matrix)

    def monomial_image(self, u: Monomial) -> Poly:
        """Expand the product of linear forms replacing each variable of u."""
        n = self.n
        zero = (0,) * n
        out: Poly = {zero: Fraction(1)}
        for j in u.indices:
            row = self.matrix[j - 1]
            form: Poly = {}
            for k, a in enumerate(row):
                if a:
                    form[zero[:k] + (1,) + zero[k + 1:]] = Fraction(a)
            out = poly_mul(out, form)
        return out


def random_coordinate_change(n: int, rng: random.Random, bound: int) -> CoordinateChange:
    if bound < 1:
        raise ValueError("coefficient bound must be at least 1")
    while True:
        matrix = tuple(tuple(rng.randint(-bound, bound) for _ in range(n))
                       for _ in range(n))
        if determinant_int(matrix) != 0:
            return CoordinateChange(matrix, bound)


def _classic_spread(ideal: MonomialIdeal) -> SpreadVector:
    top = max((g.degree for g in ideal.generators), default=1)
    return SpreadVector((0,) * max(1, top - 1))


def _gin_once(ideal: MonomialIdeal, rng: random.Random, bound: int) -> MonomialIdeal:
    change = random_coordinate_change(ideal.ambient_n, rng, bound)
    polys = [change.monomial_image(g) for g in ideal.generators]
    return initial_ideal(polys, ideal.ambient_n)


def gin(ideal: MonomialIdeal, *, seed: Optional[int] = None, bound: int = 100,
        max_retries: int = 3) -> MonomialIdeal:
    """Generic initial ideal under degrevlex.

    Two independent random coordinate changes must yield identical initial
    ideals, and the agreed result must be classically strongly stable; on
    any mismatch the coefficient bound doubles and the computation retries.
    """
    if ideal.is_zero or ideal.is_unit:
        return ideal
    rng = random.Random(seed)
    b = bound
    for _ in range(max_retries + 1):
        first = _gin_once(ideal, rng, b)
        second = _gin_once(ideal, rng, b)
        if first == second and is_strongly_stable(first, _classic_spread(first)):
            return first
        b *= 2
    raise GenericityError(
        f"independent coordinate changes kept disagreeing up to bound {b // 2}; "
        f"genericity not certified")


# -- shifting -------------------------------------------------------------------


def shift(ideal: MonomialIdeal, t, *, seed: Optional[int] = None,
          bound: int = 100, max_retries: int = 3) -> MonomialIdeal:
    """The t-spread shift: the image of Gin(I) under the 0-to-t spread map."""
    t = SpreadVector.coerce(t)
    g = gin(ideal, seed=seed, bound=bound, max_retries=max_retries)
    if g.is_zero or g.is_unit:
        return g
    top = max(u.degree for u in g.generators)
    if top > t.d:
        raise ValueError(
            f"Gin(I) has a generator of degree {top}; a spread vector with at "
            f"least {top - 1} entries is needed, got {t}")
    return apply_spread_map_ideal(SpreadMap.from_zero(t), g)


@dataclass
class ShiftReport:
    shifted: MonomialIdeal
    results: dict[str, Optional[bool]]
    witnesses: list[str]

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.results.values())

    def __str__(self) -> str:
        body = ", ".join(
            f"{k}={'skipped' if v is None else ('pass' if v else 'FAIL')}"
            for k, v in self.results.items())
        out = f"shift check ({body})"
        if self.witnesses:
            out += "\n  " + "\n  ".join(self.witnesses)
        return out


def verify_shift_properties(ideal: MonomialIdeal, t, other: Optional[MonomialIdeal] = None,
                            *, max_degree: Optional[int] = None,
                            seed: Optional[int] = None, bound: int = 100) -> ShiftReport:
    """Check the four shifting properties on one ideal (and optionally a pair).

    The shift must be t-spread strongly stable; it must fix t-spread strongly
    stable inputs; it must preserve the Hilbert function (compared in a common
    ambient); and it must preserve containment when a larger ideal is supplied.
    """
    t = SpreadVector.coerce(t)
    rng = random.Random(seed)
    results: dict[str, Optional[bool]] = {}
    witnesses: list[str] = []

    shifted = shift(ideal, t, seed=rng.randrange(2 ** 62), bound=bound)

    try:
        results["strongly_stable"] = is_strongly_stable(shifted, t)
        if not results["strongly_stable"]:
            witnesses.append(f"shifted ideal {shifted} is not strongly stable")
    except ValueError as exc:
        results["strongly_stable"] = False
        witnesses.append(f"shifted ideal is not t-spread: {exc}")

    try:
        input_ss = is_strongly_stable(ideal, t)
    except ValueError:
        input_ss = False
    if input_ss:
        results["fixed_point"] = shifted == ideal
        if not results["fixed_point"]:
            witnesses.append(
                f"strongly stable input moved: {ideal} became {shifted}")
    else:
        results["fixed_point"] = None

    if max_degree is None:
        top = max((u.degree for u in shifted.generators), default=1)
        max_degree = top + 3
    n_common = max(ideal.ambient_n, shifted.ambient_n)
    hf_in = hilbert_function(ideal.with_ambient(n_common), max_degree)
    hf_out = hilbert_function(shifted.with_ambient(n_common), max_degree)
    results["hilbert_function"] = hf_in == hf_out
    if not results["hilbert_function"]:
        witnesses.append(
            f"Hilbert functions differ in ambient {n_common}: {hf_in} vs {hf_out}")

    if other is None:
        results["containment"] = None
    else:
        if not other.contains_ideal(ideal):
            raise ValueError("containment check needs the first ideal inside "
                             "the second")
        shifted_other = shift(other, t, seed=rng.randrange(2 ** 62), bound=bound)
        results["containment"] = shifted_other.contains_ideal(shifted)
        if not results["containment"]:
            witnesses.append(
                f"containment lost: {shifted} is not inside {shifted_other}")

    return ShiftReport(shifted, results, witnesses)
