"""Graded Betti numbers: closed formula, tables, and the homology oracle."""

from __future__ import annotations

import random

import pytest

from vecspread import (
    BettiTable,
    MonomialIdeal,
    SpreadVector,
    betti_table,
    free_indices,
    homology_basis_labels,
    homology_dimensions,
    parse_monomial,
    poincare_pd_reg,
    verify_homology_basis,
    verify_homology_basis_range,
)

from util import (
    ex_resolution_ideal,
    ex_spread_ideal,
    random_spread_vector,
    random_strongly_stable_ideal,
)


# -- table plumbing -----------------------------------------------------------


def test_view_conversion_roundtrip():
    tb = betti_table(*ex_spread_ideal(), view="ideal")
    assert tb.view == "ideal"
    q = tb.to_quotient()
    assert q.view == "quotient"
    assert q.to_ideal() == tb
    assert tb.to_ideal() == tb
    assert q.to_quotient() == q


def test_totals_pd_reg_first_fixture():
    ideal, t = ex_spread_ideal()
    tb = betti_table(ideal, t, view="ideal")
    assert tb.totals() == [4, 5, 2]
    assert tb.total(1) == 5
    assert tb.projective_dimension == 2
    assert tb.regularity == 4
    q = tb.to_quotient()
    assert q.totals() == [1, 4, 5, 2]
    assert q.projective_dimension == 3
    assert q.regularity == 3


def test_entries_first_fixture():
    ideal, t = ex_spread_ideal()
    assert betti_table(ideal, t, view="ideal").entries == {
        (0, 1): 1, (0, 3): 1, (0, 4): 2, (1, 4): 1, (1, 5): 4, (2, 6): 2}
    assert betti_table(ideal, t, view="quotient").entries == {
        (0, 0): 1, (1, 1): 1, (1, 3): 1, (1, 4): 2,
        (2, 4): 1, (2, 5): 4, (3, 6): 2}


def test_entries_second_fixture_both_ambients():
    for n in (4, 6):
        ideal, t = ex_resolution_ideal(n=n)
        tb = betti_table(ideal, t, view="ideal")
        assert tb.entries == {
            (0, 2): 2, (0, 3): 1, (1, 3): 1, (1, 4): 2, (2, 5): 1}
        assert tb.totals() == [3, 3, 1]


def test_ascii_goldens():
    ideal, t = ex_spread_ideal()
    assert betti_table(ideal, t, view="quotient").ascii() == (
        "        0  1  2  3\n"
        "total:  1  4  5  2\n"
        "0:      1  1  -  -\n"
        "1:      -  -  -  -\n"
        "2:      -  1  1  -\n"
        "3:      -  2  4  2")
    ideal2, t2 = ex_resolution_ideal()
    assert betti_table(ideal2, t2, view="ideal").ascii() == (
        "        0  1  2\n"
        "total:  3  3  1\n"
        "2:      2  1  -\n"
        "3:      1  2  1")


def test_json_shape():
    ideal, t = ex_resolution_ideal()
    obj = betti_table(ideal, t, view="quotient").to_json_obj()
    assert obj["view"] == "quotient"
    assert {tuple(e[:2]): e[2] for e in obj["entries"]}[(3, 5)] == 1


def test_formula_matches_free_counts():
    import math
    ideal, t = ex_spread_ideal()
    tb = betti_table(ideal, t, view="ideal")
    for g in ideal.generators:
        f = len(free_indices(g, t))
        for i in range(f + 1):
            assert tb.entries.get((i, i + g.degree), 0) >= math.comb(f, i)


def test_poincare_goldens():
    ideal, t = ex_spread_ideal()
    assert poincare_pd_reg(ideal, t) == ([4, 5, 2], 2, 4)
    ideal2, t2 = ex_resolution_ideal()
    assert poincare_pd_reg(ideal2, t2) == ([3, 3, 1], 2, 3)


def test_zero_and_unit_edge_cases():
    z = MonomialIdeal.zero(3)
    u = MonomialIdeal.unit_ideal(3)
    assert betti_table(z, (0,), view="ideal").entries == {}
    assert betti_table(z, (0,), view="quotient").entries == {(0, 0): 1}
    assert betti_table(u, (0,), view="ideal").entries == {(0, 0): 1}
    assert betti_table(u, (0,), view="quotient").entries == {}
    with pytest.raises(ValueError):
        _ = betti_table(z, (0,), view="ideal").projective_dimension
    with pytest.raises(ValueError):
        poincare_pd_reg(z, (0,))
    assert poincare_pd_reg(u, (0,)) == ([1], 0, 0)


def test_betti_requires_strongly_stable():
    bad = MonomialIdeal([parse_monomial("x2", 3)], 3)
    with pytest.raises(ValueError):
        betti_table(bad, (1,))


def test_bad_view_rejected():
    ideal, t = ex_resolution_ideal()
    with pytest.raises(ValueError):
        betti_table(ideal, t, view="module")


# -- homology oracle ------------------------------------------------------------


def test_oracle_zero_ideal():
    assert homology_dimensions(MonomialIdeal.zero(3), 3) == {(0, 0): 1}


def test_oracle_unit_ideal():
    assert homology_dimensions(MonomialIdeal.unit_ideal(3), 3) == {}


def test_oracle_principal_variable():
    ideal = MonomialIdeal([parse_monomial("x1", 3)], 3)
    assert homology_dimensions(ideal, 4) == {(0, 0): 1, (1, 1): 1}


def test_oracle_matches_formula_first_fixture():
    ideal, t = ex_spread_ideal()
    dims = homology_dimensions(ideal, 6)
    expected = dict(betti_table(ideal, t, view="quotient").entries)
    assert dims == expected


def test_oracle_matches_formula_second_fixture():
    ideal, t = ex_resolution_ideal()
    dims = homology_dimensions(ideal, 5)
    assert dims == dict(betti_table(ideal, t, view="quotient").entries)


def test_oracle_matches_formula_random():
    rng = random.Random(71)
    done = 0
    while done < 12:
        t = random_spread_vector(rng, max_len=2)
        n = rng.randint(2, 5)
        ideal = random_strongly_stable_ideal(rng, n, t)
        if ideal.is_unit:
            continue
        bound = max(g.degree for g in ideal.generators) + len(free_indices(
            max(ideal.generators, key=lambda g: len(free_indices(g, t))), t))
        dims = homology_dimensions(ideal, bound)
        assert dims == dict(betti_table(ideal, t, view="quotient").entries), (
            ideal.generators, str(t))
        done += 1


# -- basis verification -----------------------------------------------------------


def test_verify_basis_first_fixture():
    ideal, t = ex_spread_ideal()
    rep = verify_homology_basis_range(ideal, t, 8)
    assert rep.ok
    assert rep.failures == []
    assert rep.checked_labels == 11
    assert rep.label_counts == rep.homology_counts
    assert rep.label_counts == {
        (1, 1): 1, (1, 3): 1, (1, 4): 2, (2, 4): 1, (2, 5): 4, (3, 6): 2}


def test_verify_basis_single_bidegree():
    ideal, t = ex_spread_ideal()
    rep = verify_homology_basis(ideal, t, 2, 5)
    assert rep.ok
    assert rep.checked_labels == 4


def test_verify_basis_second_fixture_both_ambients():
    for n in (4, 6):
        ideal, t = ex_resolution_ideal(n=n)
        rep = verify_homology_basis_range(ideal, t, 6)
        assert rep.ok, rep.failures
        assert rep.checked_labels == sum(
            len(homology_basis_labels(ideal, t, i)) for i in range(1, 5))


def test_verify_basis_random():
    rng = random.Random(97)
    done = 0
    while done < 8:
        t = random_spread_vector(rng, max_len=2)
        n = rng.randint(2, 5)
        ideal = random_strongly_stable_ideal(rng, n, t)
        if ideal.is_unit:
            continue
        rep = verify_homology_basis_range(ideal, t, 7)
        assert rep.ok, (ideal.generators, str(t), rep.failures)
        done += 1


def test_verify_basis_requires_strongly_stable():
    bad = MonomialIdeal([parse_monomial("x2", 3)], 3)
    with pytest.raises(ValueError):
        verify_homology_basis_range(bad, (1,), 3)
