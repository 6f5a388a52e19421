"""Vector-spread monomial ideals: spread classes, Koszul homology bases,
Betti tables, minimal free resolutions, and algebraic shifting."""

from .betti import (
    BasisCheckReport,
    BettiTable,
    betti_table,
    homology_dimensions,
    poincare_pd_reg,
    verify_homology_basis,
    verify_homology_basis_range,
)
from .gin import (
    CoordinateChange,
    GenericityError,
    ShiftReport,
    buchberger,
    gin,
    initial_ideal,
    normal_form,
    poly_add,
    poly_mul,
    random_coordinate_change,
    shift,
    verify_shift_properties,
)
from .ideals import (
    ExchangeViolation,
    MonomialIdeal,
    SegmentViolation,
    admissible_shape,
    decomposition_function,
    hilbert_function,
    ideal_from_dict,
    ideal_to_dict,
    is_lex_segment,
    is_stable,
    is_strongly_stable,
    lex_violation,
    minimalize,
    stable_violation,
    standard_factorization,
    strongly_stable_closure,
    strongly_stable_violation,
)
from .koszul import (
    CycleLabel,
    KoszulChain,
    cycle_sign_parity,
    homology_basis_labels,
    koszul_cycle,
    koszul_cycle_recursive,
    koszul_differential,
    remainder_split,
    simple_cycle,
)
from .monomials import (
    Monomial,
    SpreadVector,
    compare,
    count_spread_monomials,
    degrevlex_key,
    format_monomial,
    free_indices,
    is_spread,
    iter_spread_monomials,
    lex_key,
    monomial,
    next_support_index,
    parse_monomial,
    plex_key,
    prefix_sums,
    spread,
    spread_monomials,
    spread_support,
    unit,
    variable,
)
from .resolution import (
    MonomialMatrix,
    format_poly,
    Resolution,
    ResolutionReport,
    build_resolution,
    verify_resolution,
)
from .spreadmaps import SpreadMap, apply_spread_map, apply_spread_map_ideal

__version__ = "0.1.0"

__all__ = [
    "BasisCheckReport",
    "BettiTable",
    "CoordinateChange",
    "CycleLabel",
    "ExchangeViolation",
    "GenericityError",
    "KoszulChain",
    "Monomial",
    "MonomialIdeal",
    "MonomialMatrix",
    "Resolution",
    "ResolutionReport",
    "SegmentViolation",
    "ShiftReport",
    "SpreadMap",
    "SpreadVector",
    "admissible_shape",
    "apply_spread_map",
    "apply_spread_map_ideal",
    "betti_table",
    "buchberger",
    "build_resolution",
    "compare",
    "count_spread_monomials",
    "degrevlex_key",
    "cycle_sign_parity",
    "decomposition_function",
    "format_monomial",
    "format_poly",
    "free_indices",
    "gin",
    "hilbert_function",
    "homology_basis_labels",
    "homology_dimensions",
    "ideal_from_dict",
    "ideal_to_dict",
    "initial_ideal",
    "is_lex_segment",
    "is_spread",
    "is_stable",
    "is_strongly_stable",
    "iter_spread_monomials",
    "lex_key",
    "koszul_cycle",
    "koszul_cycle_recursive",
    "koszul_differential",
    "lex_violation",
    "minimalize",
    "monomial",
    "normal_form",
    "next_support_index",
    "parse_monomial",
    "plex_key",
    "random_coordinate_change",
    "prefix_sums",
    "poincare_pd_reg",
    "poly_add",
    "poly_mul",
    "remainder_split",
    "shift",
    "simple_cycle",
    "spread",
    "spread_monomials",
    "spread_support",
    "stable_violation",
    "standard_factorization",
    "strongly_stable_closure",
    "strongly_stable_violation",
    "unit",
    "variable",
    "verify_homology_basis",
    "verify_homology_basis_range",
    "verify_resolution",
    "verify_shift_properties",
]
