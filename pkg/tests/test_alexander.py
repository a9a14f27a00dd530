"""Branched-cover homology orders by exact resultants."""

import random

import pytest

from locert.alexander import (
    NotAlexanderNormalized,
    branched_cover_order,
    evaluate_at_int,
    parse_poly,
    poly_mul,
    poly_str,
    validate_alexander,
)

TREFOIL = parse_poly("t^2 - t + 1")
FIGURE_EIGHT = parse_poly("t^2 - 3t + 1")
ONE = parse_poly("1")


def test_parse_poly():
    assert TREFOIL == {2: 1, 1: -1, 0: 1}
    assert parse_poly("3t^-1 + 2") == {-1: 3, 0: 2}
    assert parse_poly("-t + t") == {}
    assert parse_poly("t**2 - 1") == {2: 1, 0: -1}
    assert parse_poly("2*t - 1") == {1: 2, 0: -1}
    with pytest.raises(ValueError):
        parse_poly("t^2 + + 1")
    with pytest.raises(ValueError):
        parse_poly("u^2")
    with pytest.raises(ValueError):
        parse_poly("")


def test_poly_str_round_trip():
    for poly in (TREFOIL, FIGURE_EIGHT, {0: -1}, {3: 2, -1: -5}):
        assert parse_poly(poly_str(poly)) == poly


def test_validate_alexander():
    assert validate_alexander(TREFOIL).ok
    assert validate_alexander(FIGURE_EIGHT).ok
    diag = validate_alexander(parse_poly("t - 2"))
    assert not diag.ok
    assert diag.unit_at_one
    assert not diag.symmetric
    assert diag.failed_checks() == ["not symmetric under t -> 1/t up to units"]
    assert not validate_alexander(parse_poly("t + 1")).unit_at_one


def test_conway_orders_are_one():
    for n in range(2, 13):
        assert branched_cover_order(ONE, n) == 1


def test_trefoil_orders():
    # n = 2: the determinant |Delta(-1)| = 3
    # n = 3: product over cube roots: (-2w)(-2w^2) = 4w^3 = 4
    # n = 4: Delta(i) Delta(-1) Delta(-i) = (-i)(3)(i) = 3
    # n = 5: the 5-fold cover is the Poincare sphere, |H1| = 1
    # n = 6: t^2 - t + 1 divides t^6 - 1, so the homology is infinite
    assert branched_cover_order(TREFOIL, 2) == 3
    assert branched_cover_order(TREFOIL, 3) == 4
    assert branched_cover_order(TREFOIL, 4) == 3
    assert branched_cover_order(TREFOIL, 5) == 1
    assert branched_cover_order(TREFOIL, 6) is None
    assert branched_cover_order(TREFOIL, 12) is None


def test_figure_eight_orders():
    # n = 2: |Delta(-1)| = 5
    # n = 3: Delta(w) = -4w, so the product is 16w^3 = 16
    assert branched_cover_order(FIGURE_EIGHT, 2) == 5
    assert branched_cover_order(FIGURE_EIGHT, 3) == 16
    # no root of t^2 - 3t + 1 is a root of unity (real roots != +-1)
    for n in range(2, 13):
        assert branched_cover_order(FIGURE_EIGHT, n) is not None


def test_determinant_cross_check():
    # order at n = 2 equals |Delta(-1)| for every valid polynomial
    for poly in (ONE, TREFOIL, FIGURE_EIGHT, poly_mul(TREFOIL, FIGURE_EIGHT)):
        assert branched_cover_order(poly, 2) == abs(evaluate_at_int(poly, -1))


def test_multiplicativity():
    rng = random.Random(5001)
    basics = [ONE, TREFOIL, FIGURE_EIGHT]
    for _ in range(30):
        f = rng.choice(basics)
        g = rng.choice(basics)
        n = rng.randint(2, 9)
        fg = poly_mul(f, g)
        of, og, ofg = (
            branched_cover_order(f, n),
            branched_cover_order(g, n),
            branched_cover_order(fg, n),
        )
        if of is not None and og is not None:
            assert ofg == of * og
        else:
            assert ofg is None


def test_infinite_iff_cyclotomic_factor():
    # t^2 - t + 1 is the 6th cyclotomic polynomial: infinite exactly when
    # 6 divides n
    for n in range(2, 13):
        expect_infinite = n % 6 == 0
        assert (branched_cover_order(TREFOIL, n) is None) == expect_infinite
    # (t^2 - t + 1)(t^2 - 3t + 1): same verdict pattern as the trefoil
    prod = poly_mul(TREFOIL, FIGURE_EIGHT)
    for n in range(2, 13):
        assert (branched_cover_order(prod, n) is None) == (n % 6 == 0)


def test_laurent_shift_invariance():
    shifted = {e - 1: c for e, c in TREFOIL.items()}
    for n in range(2, 9):
        assert branched_cover_order(shifted, n) == branched_cover_order(TREFOIL, n)


def test_normalization_guard():
    with pytest.raises(NotAlexanderNormalized):
        branched_cover_order(parse_poly("t + 1"), 3)
    with pytest.raises(ValueError):
        branched_cover_order(TREFOIL, 1)
