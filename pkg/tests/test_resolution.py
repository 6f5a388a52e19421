"""Minimal free resolutions: construction, golden matrices, verification."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from vecspread import (
    MonomialIdeal,
    MonomialMatrix,
    SpreadVector,
    betti_table,
    build_resolution,
    format_poly,
    parse_monomial,
    unit,
    verify_resolution,
)

from util import ex_resolution_ideal, random_strongly_stable_ideal


def grid(matrix):
    return [[format_poly(matrix.entry(r, c)) for c in range(matrix.ncols)]
            for r in range(matrix.nrows)]


# -- golden matrices ----------------------------------------------------------


@pytest.mark.parametrize("n", [4, 6])
def test_golden_differentials(n):
    ideal, t = ex_resolution_ideal(n=n)
    res = build_resolution(ideal, t)
    assert res.length == 3
    assert [res.rank(i) for i in range(4)] == [1, 3, 3, 1]
    assert grid(res.differential(1)) == [["x1*x2", "x1*x3", "x1*x4^2"]]
    assert grid(res.differential(2)) == [
        ["x3", "x4^2", "0"],
        ["-x2", "0", "x4^2"],
        ["0", "-x2", "-x3"],
    ]
    assert grid(res.differential(3)) == [["-x4^2"], ["x3"], ["-x2"]]


def test_golden_basis_order():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    assert [str(l) for l in res.basis(1)] == [
        "(x1*x2; {})", "(x1*x3; {})", "(x1*x4^2; {})"]
    assert [str(l) for l in res.basis(2)] == [
        "(x1*x3; {2})", "(x1*x4^2; {2})", "(x1*x4^2; {3})"]
    assert [str(l) for l in res.basis(3)] == ["(x1*x4^2; {2,3})"]


def test_length_is_projective_dimension():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    tb = betti_table(ideal, t, view="quotient")
    assert res.length == tb.projective_dimension == 3
    assert res.graded_rank_counts() == tb.entries


def test_ascii_and_json():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    text = res.ascii()
    assert "ranks: F0=1, F1=3, F2=3, F3=1" in text
    assert "[ x1*x2  x1*x3  x1*x4^2 ]" in text
    obj = res.to_json_obj()
    assert obj["ranks"] == [1, 3, 3, 1]
    assert obj["differentials"][2]["entries"] == [
        [0, 0, "-x4^2"], [1, 0, "x3"], [2, 0, "-x2"]]


# -- verification -------------------------------------------------------------


@pytest.mark.parametrize("n", [4, 6])
def test_verify_passes(n):
    ideal, t = ex_resolution_ideal(n=n)
    rep = verify_resolution(build_resolution(ideal, t), 8)
    assert rep.ok, rep.failures
    assert rep.checks == {
        "complex": True, "minimality": True, "multigraded": True,
        "exactness": True, "graded_ranks": True}


def test_verify_detects_sign_flip():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    # turn the (0,0) entry x3 of d_2 into -x3
    res.differential(2).add_to_entry(0, 0, parse_monomial("x3", 4), -2)
    rep = verify_resolution(res, 6)
    assert not rep.ok
    assert rep.checks["complex"] is False
    assert any("d1" in f or "compose" in f or "position" in f for f in rep.failures)


def test_verify_detects_unit_entry():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    res.differential(2).add_to_entry(2, 0, unit(4), 1)
    rep = verify_resolution(res, 6)
    assert rep.checks["minimality"] is False


def test_verify_detects_wrong_multidegree():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    res.differential(2).add_to_entry(2, 0, parse_monomial("x4^2", 4), 1)
    rep = verify_resolution(res, 6)
    assert rep.checks["multigraded"] is False


def test_verify_detects_rank_drop():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    res.differential(3).entries.clear()
    rep = verify_resolution(res, 6)
    assert not rep.ok
    assert rep.checks["complex"] is True  # zero map still composes to zero
    assert rep.checks["exactness"] is False


# -- structural properties ------------------------------------------------------


def test_complex_property_random():
    rng = random.Random(31)
    done = 0
    while done < 15:
        width = rng.randint(1, 3)
        ones = rng.randint(0, width)
        t = SpreadVector(tuple([1] * ones + [0] * (width - ones)))
        n = rng.randint(2, 6)
        ideal = random_strongly_stable_ideal(rng, n, t)
        if ideal.is_unit:
            continue
        res = build_resolution(ideal, t)
        for i in range(1, res.length):
            prod = res.differential(i).compose(res.differential(i + 1))
            assert prod.is_zero
        rep = verify_resolution(res, 6)
        assert rep.ok, (ideal.generators, str(t), rep.failures)
        done += 1


def test_column_support_bound():
    # each summand of the differential contributes at most two entries per
    # sigma element
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    for i in range(2, res.length + 1):
        m = res.differential(i)
        for c in range(m.ncols):
            nonzero = sum(1 for r in range(m.nrows) if m.entry(r, c))
            assert nonzero <= 2 * (i - 1)


def test_matrix_compose_shapes():
    a = MonomialMatrix(2, 1)
    a.add_to_entry(0, 0, parse_monomial("x1", 3), 1)
    b = MonomialMatrix(1, 2)
    b.add_to_entry(0, 1, parse_monomial("x2", 3), Fraction(3))
    ab = a.compose(b)
    assert ab.nrows == 2 and ab.ncols == 2
    assert format_poly(ab.entry(0, 1)) == "3*x1*x2"
    with pytest.raises(ValueError):
        a.compose(a)  # 2x1 cannot follow 2x1


# -- domain restrictions ---------------------------------------------------------


def test_build_rejects_bad_shape():
    ideal = MonomialIdeal([parse_monomial("x1", 6)], 6)
    with pytest.raises(ValueError):
        build_resolution(ideal, (1, 0, 2))
    with pytest.raises(ValueError):
        build_resolution(ideal, (0, 1))


def test_build_rejects_unit_ideal():
    with pytest.raises(ValueError):
        build_resolution(MonomialIdeal.unit_ideal(3), (1,))


def test_build_rejects_non_strongly_stable():
    ideal = MonomialIdeal([parse_monomial("x2", 3)], 3)
    with pytest.raises(ValueError):
        build_resolution(ideal, (1,))


def test_zero_ideal_resolves_to_ring():
    res = build_resolution(MonomialIdeal.zero(3), (1,))
    assert res.length == 0
    assert res.rank(0) == 1
    assert verify_resolution(res, 4).ok


def test_accessor_errors():
    ideal, t = ex_resolution_ideal()
    res = build_resolution(ideal, t)
    with pytest.raises(ValueError):
        res.differential(0)
    with pytest.raises(ValueError):
        res.differential(4)
    with pytest.raises(ValueError):
        res.basis(0)
    assert res.rank(0) == 1
