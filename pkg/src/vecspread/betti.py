"""Graded Betti numbers: closed formula and an independent homology oracle.

The formula side evaluates binomial counts attached to the minimal
generators of a strongly stable spread ideal.  The oracle side knows nothing
about that: it assembles exact matrices of the Koszul differential on graded
pieces and measures kernels and images by fraction-free rank, so the two
routes cross-check each other.

Both the oracle and the basis verifier work one multidegree at a time.  The
Koszul complex of a monomial quotient splits into finitely many blocks, one
per exponent vector a, with wedge subsets tau drawn from the support of a
and residues x^(a - 1_tau).  Two block shapes are dispatched without any
elimination: if even the residue at the full support lies in the ideal the
block is zero, and if x^a itself survives then every residue does and the
block is the (exact) simplicial chain complex of a full simplex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .ideals import MonomialIdeal, require_strongly_stable
from .koszul import CycleLabel, homology_basis_labels, koszul_cycle, koszul_differential
from .linalg import _clear_row, rank_int
from .monomials import SpreadVector, free_indices


class BettiTable:
    """Graded Betti numbers beta_{i,j}, either of an ideal or its quotient."""

    def __init__(self, entries: dict[tuple[int, int], int], view: str):
        if view not in ("ideal", "quotient"):
            raise ValueError(f"view must be 'ideal' or 'quotient', got {view!r}")
        self.entries = {k: v for k, v in entries.items() if v}
        self.view = view

    def to_quotient(self) -> "BettiTable":
        if self.view == "quotient":
            return self
        shifted = {(i + 1, j): v for (i, j), v in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(shifted, "quotient")

    def to_ideal(self) -> "BettiTable":
        if self.view == "ideal":
            return self
        shifted = {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1}
        return BettiTable(shifted, "ideal")

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [self.total(i) for i in range(top + 1)]

    @property
    def projective_dimension(self) -> int:
        if not self.entries:
            raise ValueError("empty table has no projective dimension")
        return max(i for i, _ in self.entries)

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty table has no regularity")
        return max(j - i for i, j in self.entries)

    def ascii(self) -> str:
        """Rows labelled by j - i, columns by i, '-' marking zero cells."""
        if not self.entries:
            return "(zero table)"
        max_i = max(i for i, _ in self.entries)
        rows = [j - i for i, j in self.entries]
        r_lo, r_hi = min(rows), max(rows)
        head = [""] + [str(i) for i in range(max_i + 1)]
        body = [head, ["total:"] + [str(self.total(i)) for i in range(max_i + 1)]]
        for r in range(r_lo, r_hi + 1):
            cells = [f"{r}:"]
            for i in range(max_i + 1):
                v = self.entries.get((i, i + r), 0)
                cells.append(str(v) if v else "-")
            body.append(cells)
        widths = [max(len(row[c]) for row in body) for c in range(len(head))]
        lines = []
        for row in body:
            first = row[0].ljust(widths[0])
            rest = "  ".join(cell.rjust(widths[c + 1])
                             for c, cell in enumerate(row[1:]))
            lines.append((first + "  " + rest).rstrip())
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "view": self.view,
            "entries": sorted([i, j, v] for (i, j), v in self.entries.items()),
            "totals": self.totals(),
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.view == other.view and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BettiTable({self.view}, {sorted(self.entries.items())})"


def betti_table(ideal: MonomialIdeal, t, view: str = "ideal") -> BettiTable:
    """Graded Betti numbers from the generator formula.

    Each generator u of degree j contributes binom(c, i) to beta_{i,i+j}
    where c counts the indices below max(u) left free by the spread support.
    """
    if view not in ("ideal", "quotient"):
        raise ValueError(f"view must be 'ideal' or 'quotient', got {view!r}")
    t = SpreadVector.coerce(t)
    require_strongly_stable(ideal, t)
    entries: dict[tuple[int, int], int] = {}
    if ideal.is_unit:
        # S/S is the zero module: its quotient table is empty, so the
        # generic view conversion (built for proper ideals) must be bypassed
        if view == "quotient":
            return BettiTable({}, "quotient")
        entries[(0, 0)] = 1
    else:
        for u in ideal.generators:
            c = len(free_indices(u, t))
            j = u.degree
            for i in range(c + 1):
                entries[(i, i + j)] = entries.get((i, i + j), 0) + comb(c, i)
    table = BettiTable(entries, "ideal")
    return table if view == "ideal" else table.to_quotient()


def poincare_pd_reg(ideal: MonomialIdeal, t) -> tuple[list[int], int, int]:
    """Total Betti numbers of the ideal plus projective dimension and
    regularity, straight from the generator data."""
    t = SpreadVector.coerce(t)
    require_strongly_stable(ideal, t)
    if ideal.is_zero:
        raise ValueError("the zero ideal has no Poincare data")
    if ideal.is_unit:
        return [1], 0, 0
    frees = [len(free_indices(u, t)) for u in ideal.generators]
    pd = max(frees)
    reg = max(u.degree for u in ideal.generators)
    coeffs = [sum(comb(c, i) for c in frees) for i in range(pd + 1)]
    return coeffs, pd, reg


# -- multidegree blocks of the Koszul complex ---------------------------------


@dataclass
class _Block:
    """Koszul data of one exponent vector: wedge bases, matrices, ranks."""

    support: tuple[int, ...]
    bases: list[list[tuple[int, ...]]]          # bases[i]: wedge tuples, |tau| = i
    index: list[dict[tuple[int, ...], int]]
    ranks: list[int]                            # ranks[i] = rank of d_i, i = 0..s+1
    mats: list[list[list[int]]]

    def kernel_dim(self, i: int) -> int:
        return len(self.bases[i]) - self.ranks[i]

    def homology(self, i: int) -> int:
        return self.kernel_dim(i) - self.ranks[i + 1]


def _build_block(ideal: MonomialIdeal, a: tuple[int, ...]) -> Optional[_Block]:
    """Block of the Koszul complex in multidegree a, or None when it needs no
    elimination (zero block, or the exact full-simplex block with a != 0)."""
    n = ideal.ambient_n
    support = tuple(k for k in range(n) if a[k] > 0)  # 0-based here
    s = len(support)
    if s == 0:
        return None  # handled by callers: only H_0 at a = 0
    top = list(a)
    for k in support:
        top[k] -= 1
    if ideal.contains_exponents(tuple(top)):
        return None  # every residue lies in the ideal
    if not ideal.contains_exponents(a):
        return None  # all residues survive: full simplex, exact everywhere

    bases: list[list[tuple[int, ...]]] = [[] for _ in range(s + 1)]
    index: list[dict[tuple[int, ...], int]] = [dict() for _ in range(s + 1)]
    for mask in range(1 << s):
        tau = tuple(support[p] for p in range(s) if mask >> p & 1)
        exps = list(a)
        for k in tau:
            exps[k] -= 1
        if not ideal.contains_exponents(tuple(exps)):
            wedge = tuple(k + 1 for k in tau)  # back to 1-based variable labels
            index[len(tau)][wedge] = len(bases[len(tau)])
            bases[len(tau)].append(wedge)

    mats: list[list[list[int]]] = [[] for _ in range(s + 2)]
    ranks = [0] * (s + 2)
    for i in range(1, s + 1):
        rows, cols = index[i - 1], bases[i]
        if not rows or not cols:
            continue
        mat = [[0] * len(cols) for _ in rows]
        for c, tau in enumerate(cols):
            for pos in range(i):
                r = rows.get(tau[:pos] + tau[pos + 1:])
                if r is not None:
                    mat[r][c] = -1 if pos % 2 else 1
        mats[i] = mat
        ranks[i] = rank_int(mat)
    return _Block(support, bases, index, ranks, mats)


def _multidegrees(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _multidegrees(total - first, parts - 1):
            yield (first,) + rest


def homology_dimensions(ideal: MonomialIdeal, max_degree: int) -> dict[tuple[int, int], int]:
    """dim_K H_i(x; S/I) in each internal degree q <= max_degree.

    Brute-force oracle: exact ranks of the Koszul differential, computed
    blockwise per multidegree.  Valid for arbitrary monomial ideals.
    """
    n = ideal.ambient_n
    dims: dict[tuple[int, int], int] = {}
    if not ideal.is_unit:
        dims[(0, 0)] = 1  # H_0 = K in multidegree zero
    for q in range(1, max_degree + 1):
        for a in _multidegrees(q, n):
            block = _build_block(ideal, a)
            if block is None:
                continue
            for i in range(len(block.bases)):
                h = block.homology(i)
                if h:
                    dims[(i, q)] = dims.get((i, q), 0) + h
    return dims


# -- verification of the distinguished cycles ---------------------------------


@dataclass
class BasisCheckReport:
    ok: bool
    checked_labels: int
    label_counts: dict[tuple[int, int], int]
    homology_counts: dict[tuple[int, int], int]
    failures: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (f"basis check {status}: {self.checked_labels} cycles; "
                + "; ".join(self.failures[:4]))


def _cycle_column(block: _Block, i: int, chain) -> Optional[list]:
    """Coordinates of a chain over the block's degree-i wedge basis."""
    col = [0] * len(block.bases[i])
    lookup = block.index[i]
    for wedge, mono, coeff in chain.terms():
        r = lookup.get(wedge)
        if r is None:
            return None
        col[r] = coeff
    return col


def verify_homology_basis(ideal: MonomialIdeal, t, hom_degree: int,
                          internal_degree: int) -> BasisCheckReport:
    """Check the distinguished cycles at one (i, q) spot; see _sweep."""
    return _sweep(ideal, t, [internal_degree], hom_degree)


def verify_homology_basis_range(ideal: MonomialIdeal, t,
                                max_internal_degree: int) -> BasisCheckReport:
    """Check the distinguished cycles at every i and q <= the bound."""
    return _sweep(ideal, t, list(range(1, max_internal_degree + 1)), None)


def _sweep(ideal: MonomialIdeal, t, degrees: list[int],
           hom_filter: Optional[int]) -> BasisCheckReport:
    """Certify, degree by degree and multidegree by multidegree, that the
    labelled cycles are (a) cycles, (b) independent modulo boundaries and
    (c) spanning modulo boundaries."""
    t = SpreadVector.coerce(t)
    require_strongly_stable(ideal, t)
    if hom_filter is not None and hom_filter < 1:
        raise ValueError("homological degree must be at least 1")
    n = ideal.ambient_n
    degree_set = set(degrees)
    failures: list[str] = []
    label_counts: dict[tuple[int, int], int] = {}
    homology_counts: dict[tuple[int, int], int] = {}
    checked = 0

    max_free = max((len(free_indices(u, t)) for u in ideal.generators), default=0)
    hom_range = ([hom_filter] if hom_filter is not None
                 else list(range(1, max_free + 2)))

    # cycles grouped by multidegree
    by_mdeg: dict[tuple[int, ...], list[tuple[CycleLabel, object]]] = {}
    for i in hom_range:
        for label in homology_basis_labels(ideal, t, i):
            if label.internal_degree not in degree_set:
                continue
            chain = koszul_cycle(ideal, t, label.generator, label.sigma)
            checked += 1
            key = (i, label.internal_degree)
            label_counts[key] = label_counts.get(key, 0) + 1
            if chain.is_zero:
                failures.append(f"cycle of {label} vanished")
                continue
            if not koszul_differential(chain).is_zero:
                failures.append(f"differential of cycle {label} is non-zero")
                continue
            mdeg = label.multidegree()
            mdeg = mdeg + (0,) * (n - len(mdeg))
            by_mdeg.setdefault(mdeg, []).append((label, chain))

    for q in sorted(degree_set):
        for a in _multidegrees(q, n):
            block = _build_block(ideal, a)
            here = by_mdeg.get(a, [])
            if block is None:
                if here:
                    failures.append(
                        f"labels {[str(l) for l, _ in here]} land in a "
                        f"homology-free multidegree {a}")
                continue
            s = len(block.support)
            for i in hom_range:
                if i > s + 1:
                    continue
                cycles = [(label, ch) for label, ch in here
                          if label.hom_degree == i]
                cols = []
                for label, ch in cycles:
                    col = _cycle_column(block, i, ch)
                    if col is None:
                        failures.append(f"cycle {label} leaves its block")
                        continue
                    cols.append(col)
                h = block.homology(i) if i <= s else 0
                if h:
                    key = (i, q)
                    homology_counts[key] = homology_counts.get(key, 0) + h
                if not cols and (i > s or not block.bases[i]):
                    continue
                boundary = block.mats[i + 1] if i + 1 <= s else []
                nrows = len(block.bases[i]) if i <= s else 0
                rows = [list(r) for r in boundary] if boundary else \
                       [[] for _ in range(nrows)]
                for col in cols:
                    for r in range(nrows):
                        rows[r].append(col[r])
                aug_rank = rank_int(_clear_row(r) for r in rows) if rows else 0
                b_rank = block.ranks[i + 1] if i + 1 <= s else 0
                if aug_rank != b_rank + len(cols):
                    failures.append(
                        f"cycles at multidegree {a}, i={i} are dependent "
                        f"modulo boundaries")
                kernel = block.kernel_dim(i) if i <= s else 0
                if kernel != b_rank + len(cols):
                    failures.append(
                        f"cycles at multidegree {a}, i={i} do not span: "
                        f"kernel {kernel}, boundaries {b_rank}, cycles {len(cols)}")

    ok = not failures
    return BasisCheckReport(ok, checked, label_counts, homology_counts, failures)
