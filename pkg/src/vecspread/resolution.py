"""Minimal free resolutions of S/I for spread vectors shaped (1,..,1,0,..,0).

The resolution's position-i basis is labelled by pairs (u, sigma) with u a
minimal generator and sigma a set of i-1 free indices; the differential acts
by

    d(f(u; sigma)) = sum over k in sigma of
        (-1)^{alpha(sigma;k)} (-x_k f(u; sigma minus k) + v_k f(u_k; sigma minus k))

where alpha(sigma;k) counts the sigma elements below k, u_k is the
decomposition of x_k u (the plex-largest generator dividing it) and
v_k = x_k u / u_k.  Whenever sigma minus k stops being a set of free indices
for u_k, that summand is dropped (the zero convention).

Verification never trusts the formula: the complex property is expanded
symbolically, and exactness is measured with integer ranks, one multidegree
at a time, against the independently counted Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .ideals import (
    MonomialIdeal,
    admissible_shape,
    decomposition_function,
    hilbert_function,
    require_strongly_stable,
)
from .koszul import CycleLabel, homology_basis_labels
from .linalg import _clear_row, rank_int
from .monomials import (
    Monomial,
    SpreadVector,
    format_monomial,
    free_indices,
    plex_key,
    variable,
)

Poly = dict[Monomial, Fraction]


def _poly_add(dst: Poly, mono: Monomial, coeff: Fraction) -> None:
    new = dst.get(mono, Fraction(0)) + coeff
    if new == 0:
        dst.pop(mono, None)
    else:
        dst[mono] = new


def format_poly(poly: Poly) -> str:
    if not poly:
        return "0"
    pieces = []
    for mono, coeff in sorted(poly.items(), key=lambda kv: plex_key(kv[0]),
                              reverse=True):
        mag = abs(coeff)
        body = format_monomial(mono) if mag == 1 else \
            f"{mag}*{format_monomial(mono)}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(("+" if coeff > 0 else "-") + body)
    return "".join(pieces)


class MonomialMatrix:
    """A sparse matrix whose entries are polynomials with exact coefficients."""

    def __init__(self, nrows: int, ncols: int,
                 entries: Optional[dict[tuple[int, int], Poly]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], Poly] = {}
        if entries:
            for (r, c), poly in entries.items():
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise ValueError(f"entry ({r},{c}) outside {nrows}x{ncols}")
                if poly:
                    self.entries[(r, c)] = dict(poly)

    def entry(self, r: int, c: int) -> Poly:
        return dict(self.entries.get((r, c), {}))

    def add_to_entry(self, r: int, c: int, mono: Monomial, coeff) -> None:
        poly = self.entries.setdefault((r, c), {})
        _poly_add(poly, mono, Fraction(coeff))
        if not poly:
            del self.entries[(r, c)]

    def copy(self) -> "MonomialMatrix":
        return MonomialMatrix(self.nrows, self.ncols, self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def compose(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Matrix product self @ other (apply other first)."""
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot compose {self.nrows}x{self.ncols} with "
                f"{other.nrows}x{other.ncols}")
        out = MonomialMatrix(self.nrows, other.ncols)
        for (r, m), p in self.entries.items():
            for (m2, c), q in other.entries.items():
                if m2 != m:
                    continue
                for mono1, c1 in p.items():
                    for mono2, c2 in q.items():
                        out.add_to_entry(r, c, mono1.mul(mono2), c1 * c2)
        return out

    def ascii(self) -> str:
        cells = [[format_poly(self.entries.get((r, c), {}))
                  for c in range(self.ncols)] for r in range(self.nrows)]
        if not cells or not cells[0]:
            return "[ ]"
        widths = [max(len(cells[r][c]) for r in range(self.nrows))
                  for c in range(self.ncols)]
        lines = []
        for row in cells:
            body = "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row))
            lines.append("[ " + body.rstrip() + " ]")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"MonomialMatrix({self.nrows}x{self.ncols}, {len(self.entries)} entries)"


class Resolution:
    """Free resolution data: labelled bases and differential matrices.

    Position 0 is the rank-one free module S; position i >= 1 has one basis
    element per label in bases[i-1].  diffs[i-1] is the matrix of d_i.
    """

    def __init__(self, ideal: MonomialIdeal, t: SpreadVector,
                 bases: list[list[CycleLabel]], diffs: list[MonomialMatrix]):
        if len(bases) != len(diffs):
            raise ValueError("one differential is needed per positive position")
        self.ideal = ideal
        self.t = t
        self.bases = [list(b) for b in bases]
        self.diffs = list(diffs)

    @property
    def length(self) -> int:
        return len(self.bases)

    def rank(self, i: int) -> int:
        if i == 0:
            return 1
        if 1 <= i <= self.length:
            return len(self.bases[i - 1])
        return 0

    def basis(self, i: int) -> list[CycleLabel]:
        if not 1 <= i <= self.length:
            raise ValueError(f"no labelled basis at position {i}")
        return list(self.bases[i - 1])

    def differential(self, i: int) -> MonomialMatrix:
        if not 1 <= i <= self.length:
            raise ValueError(f"no differential d_{i}")
        return self.diffs[i - 1]

    def graded_rank_counts(self) -> dict[tuple[int, int], int]:
        counts = {(0, 0): 1}
        for i, labels in enumerate(self.bases, start=1):
            for lab in labels:
                key = (i, lab.internal_degree)
                counts[key] = counts.get(key, 0) + 1
        return counts

    def ascii(self) -> str:
        ranks = ", ".join(f"F{i}={self.rank(i)}" for i in range(self.length + 1))
        lines = [f"ranks: {ranks}"]
        for i in range(1, self.length + 1):
            lines.append("")
            lines.append(f"d{i} (F{i} -> F{i - 1}):")
            lines.append(self.differential(i).ascii())
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "ranks": [self.rank(i) for i in range(self.length + 1)],
            "bases": [[str(lab) for lab in labels] for labels in self.bases],
            "differentials": [
                {
                    "rows": d.nrows,
                    "cols": d.ncols,
                    "entries": sorted(
                        [r, c, format_poly(poly)]
                        for (r, c), poly in d.entries.items()),
                }
                for d in self.diffs
            ],
        }


def build_resolution(ideal: MonomialIdeal, t) -> Resolution:
    """Assemble the labelled resolution of S/I from the generator data."""
    t = SpreadVector.coerce(t)
    if not admissible_shape(t):
        raise ValueError(
            f"resolution formula needs a spread vector shaped (1,..,1,0,..,0), "
            f"got {t}")
    require_strongly_stable(ideal, t)
    if ideal.is_unit:
        raise ValueError("the quotient by the unit ideal is zero")

    bases: list[list[CycleLabel]] = []
    if not ideal.is_zero:
        i = 1
        while True:
            labels = homology_basis_labels(ideal, t, i)
            if not labels:
                break
            bases.append(labels)
            i += 1

    diffs: list[MonomialMatrix] = []
    n = ideal.ambient_n
    for i in range(1, len(bases) + 1):
        cols = bases[i - 1]
        if i == 1:
            d = MonomialMatrix(1, len(cols))
            for c, lab in enumerate(cols):
                d.add_to_entry(0, c, lab.generator, 1)
            diffs.append(d)
            continue
        rows = {lab: r for r, lab in enumerate(bases[i - 2])}
        d = MonomialMatrix(len(rows), len(cols))
        for c, lab in enumerate(cols):
            u, sigma = lab.generator, lab.sigma
            for pos, k in enumerate(sigma):
                sign = -1 if pos % 2 else 1  # alpha(sigma;k) = elements below k
                tau = sigma[:pos] + sigma[pos + 1:]
                d.add_to_entry(rows[CycleLabel(u, tau)], c, variable(k, n), -sign)
                w = u.times_var(k)
                u_k = decomposition_function(ideal, t, w)
                if set(tau) <= set(free_indices(u_k, t)):
                    v_k = w.divide(u_k)
                    d.add_to_entry(rows[CycleLabel(u_k, tau)], c, v_k, sign)
        diffs.append(d)
    return Resolution(ideal, t, bases, diffs)


# -- verification --------------------------------------------------------------


@dataclass
class ResolutionReport:
    ok: bool
    checks: dict[str, bool]
    failures: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAILED"
        flags = ", ".join(f"{k}={'pass' if v else 'FAIL'}"
                          for k, v in self.checks.items())
        out = f"resolution check {status} ({flags})"
        if self.failures:
            out += "\n  " + "\n  ".join(self.failures[:8])
        return out


def _multidegrees(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _multidegrees(total - first, parts - 1):
            yield (first,) + rest


def verify_resolution(res: Resolution, max_degree: int) -> ResolutionReport:
    """Check the complex property, minimality, graded exactness and ranks.

    Exactness is certified multidegree by multidegree with exact integer
    ranks; the cokernel at position 0 is compared against the directly
    counted Hilbert function of S/I.
    """
    ideal = res.ideal
    n = ideal.ambient_n
    failures: list[str] = []
    checks: dict[str, bool] = {}

    # (a) d compose d = 0 symbolically
    ok = True
    for i in range(1, res.length):
        prod = res.differential(i).compose(res.differential(i + 1))
        if not prod.is_zero:
            ok = False
            bad = sorted(prod.entries)[0]
            failures.append(
                f"d{i} d{i + 1} is non-zero, e.g. entry {bad} = "
                f"{format_poly(prod.entries[bad])}")
    checks["complex"] = ok

    # (b) minimality: entries stay inside the irrelevant maximal ideal
    ok = True
    for i in range(1, res.length + 1):
        for (r, c), poly in res.differential(i).entries.items():
            if any(m.is_unit for m in poly):
                ok = False
                failures.append(
                    f"d{i} entry ({r},{c}) = {format_poly(poly)} has a "
                    f"constant term")
    checks["minimality"] = ok

    # multidegree bookkeeping for exactness; entries must be multihomogeneous
    # for the blockwise ranks to mean anything, so that is checked first
    ok = True
    mdegs: list[list[tuple[int, ...]]] = [[(0,) * n]]
    for labels in res.bases:
        mdegs.append([lab.multidegree() for lab in labels])
    scalars: list[dict[tuple[int, int], Fraction]] = []
    for i in range(1, res.length + 1):
        d = res.differential(i)
        block: dict[tuple[int, int], Fraction] = {}
        for (r, c), poly in d.entries.items():
            want = tuple(a - b for a, b in zip(mdegs[i][c], mdegs[i - 1][r]))
            for mono, coeff in poly.items():
                if mono.exponents != want:
                    ok = False
                    failures.append(
                        f"d{i} entry ({r},{c}) term {format_monomial(mono)} "
                        f"breaks the multigrading")
                else:
                    block[(r, c)] = coeff
        scalars.append(block)
    checks["multigraded"] = ok

    ok = True
    if checks["multigraded"]:
        hf = hilbert_function(ideal, max_degree)
        for q in range(max_degree + 1):
            coker_total = 0
            for a in _multidegrees(q, n):
                if not ideal.contains_exponents(a):
                    coker_total += 1  # no label divides a; all blocks vanish
                    continue
                active = [[0]]  # position 0: the single basis element of S
                for i in range(1, res.length + 1):
                    active.append([c for c, m in enumerate(mdegs[i])
                                   if all(x <= y for x, y in zip(m, a))])
                ranks = [0] * (res.length + 2)
                for i in range(1, res.length + 1):
                    rows, cols = active[i - 1], active[i]
                    if not rows or not cols:
                        continue
                    rlook = {m: p for p, m in enumerate(rows)}
                    mat = [[Fraction(0)] * len(cols) for _ in rows]
                    for ci, c in enumerate(cols):
                        for r in range(len(mdegs[i - 1])):
                            coeff = scalars[i - 1].get((r, c))
                            if coeff and r in rlook:
                                mat[rlook[r]][ci] = coeff
                    ranks[i] = rank_int(_clear_row(row) for row in mat)
                coker_total += 1 - ranks[1]
                for i in range(1, res.length + 1):
                    kernel = len(active[i]) - ranks[i]
                    if kernel != ranks[i + 1]:
                        ok = False
                        failures.append(
                            f"not exact at position {i}, degree {q}, "
                            f"multidegree {a}: kernel {kernel}, next image "
                            f"{ranks[i + 1]}")
            if coker_total != hf[q]:
                ok = False
                failures.append(
                    f"cokernel at position 0 has dimension {coker_total} in "
                    f"degree {q}, Hilbert function says {hf[q]}")
    else:
        ok = False
        failures.append("exactness skipped: differentials not multigraded")
    checks["exactness"] = ok

    # (d) graded ranks against the closed Betti formula
    from .betti import betti_table  # local import to avoid a cycle

    expected = betti_table(ideal, res.t, view="quotient").entries
    got = res.graded_rank_counts()
    ok = got == expected
    if not ok:
        failures.append(
            f"graded ranks {sorted(got.items())} differ from the Betti "
            f"formula {sorted(expected.items())}")
    checks["graded_ranks"] = ok

    return ResolutionReport(all(checks.values()), checks, failures)
