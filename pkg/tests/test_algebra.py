"""Tests for the exact lattice/radix arithmetic layer.

Expected values were frozen from hand arithmetic (2x2 integer matrices,
rational solves) and cross-checked against truncated floating-point sums.
"""

from fractions import Fraction as F

import pytest

from tilelab.algebra import (
    Family,
    LatticeVec,
    PeriodicWord,
    RationalVec,
    TilePoly,
    apply_A,
    apply_A_inverse,
    eval_radix_finite,
    eval_radix_periodic,
    neighbor_step,
    validate_poly,
)
from tilelab.errors import (
    DegenerateDeterminant,
    DigitOutOfRange,
    NotDiskLike,
    NotExpanding,
)


def lv(g, d):
    return LatticeVec(g, d)


# === polynomial validation and family classification ===

@pytest.mark.parametrize(
    "p,q,family",
    [
        (0, 2, Family.PLUS_Q),
        (0, 5, Family.PLUS_Q),
        (0, -2, Family.MINUS_Q),
        (0, -5, Family.MINUS_Q),
        (1, 2, Family.PLUS_X),
        (1, 5, Family.PLUS_X),
        (-1, 3, Family.MINUS_X),
        (2, 3, Family.PLUS_PX),
        (3, 5, Family.PLUS_PX),
        (-2, 3, Family.MINUS_PX),
        (-3, 5, Family.MINUS_PX),
        (1, -4, Family.PLUS_PX_MINUS_Q),
        (2, -6, Family.PLUS_PX_MINUS_Q),
        (-1, -4, Family.MINUS_PX_MINUS_Q),
        (-2, -6, Family.MINUS_PX_MINUS_Q),
        (2, 2, Family.PLUS_2X),
        (-2, 2, Family.MINUS_2X),
    ],
)
def test_family_classification(p, q, family):
    poly = validate_poly(p, q)
    assert poly.family is family
    assert poly.p == p and poly.q == q
    assert poly.disk_like and poly.expanding


def test_family_tokens_are_stable():
    assert validate_poly(2, 3).family.value == "x^2+px+q"
    assert validate_poly(0, -3).family.value == "x^2-q"
    assert validate_poly(-2, 2).family.value == "x^2-2x+2"


@pytest.mark.parametrize("p,q", [(0, 0), (0, 1), (0, -1), (3, 1), (-2, 0)])
def test_degenerate_determinant(p, q):
    with pytest.raises(DegenerateDeterminant):
        validate_poly(p, q)


@pytest.mark.parametrize("p,q", [(5, 3), (-4, 3), (1, -2), (3, -4), (-2, -3)])
def test_not_expanding(p, q):
    with pytest.raises(NotExpanding):
        validate_poly(p, q)


@pytest.mark.parametrize("p,q", [(3, 3), (-3, 3), (4, 5), (2, -5), (-3, -7)])
def test_not_disk_like(p, q):
    # expanding but 2|p| > |q+2|
    with pytest.raises(NotDiskLike):
        validate_poly(p, q)


def test_similarity_flag():
    assert validate_poly(0, 2).similarity        # p = 0
    assert validate_poly(0, -3).similarity       # p = 0
    assert validate_poly(1, 2).similarity        # 1 <= 8
    assert validate_poly(-2, 2).similarity       # 4 <= 8
    assert validate_poly(2, 3).similarity        # 4 <= 12
    assert not validate_poly(1, -4).similarity   # q < 0, p != 0
    assert not validate_poly(-2, -6).similarity
    assert not validate_poly(7, 12).similarity   # 49 > 48, disk-like though


def test_tilepoly_is_frozen():
    poly = validate_poly(2, 3)
    with pytest.raises(AttributeError):
        poly.p = 5
    assert poly == TilePoly(2, 3, Family.PLUS_PX, True, True, True)


# === lattice vector arithmetic ===

def test_lattice_vec_algebra():
    a, b = lv(2, -1), lv(-1, 3)
    assert a + b == lv(1, 2)
    assert a - b == lv(3, -4)
    assert -a == lv(-2, 1)
    assert 3 * b == lv(-3, 9)
    assert lv(0, 0).is_zero()
    assert not a.is_zero()
    assert hash(lv(2, -1)) == hash(a)


def test_apply_A_fixtures():
    poly = validate_poly(2, 3)
    assert apply_A(poly, lv(1, 0)) == lv(0, 1)       # v -> Av
    assert apply_A(poly, lv(0, 1)) == lv(-3, -2)     # Av -> A^2 v = -pAv - qv
    neg = validate_poly(-2, 2)
    assert apply_A(neg, lv(1, 0)) == lv(0, 1)
    assert apply_A(neg, lv(0, 1)) == lv(-2, 2)


def test_apply_A_inverse_round_trip():
    for p, q in [(2, 3), (0, 2), (-2, 2), (1, -4), (-1, -5)]:
        poly = validate_poly(p, q)
        for g in range(-4, 5):
            for d in range(-4, 5):
                ell = lv(g, d)
                back = apply_A_inverse(poly, apply_A(poly, ell))
                assert back == RationalVec(F(g), F(d))


def test_apply_A_inverse_value():
    poly = validate_poly(2, 3)
    x = apply_A_inverse(poly, lv(1, 0))
    assert x == RationalVec(F(-2, 3), F(-1, 3))


# === neighbor step ===

def test_neighbor_step_matches_apply_A():
    poly = validate_poly(2, 3)
    assert neighbor_step(poly, lv(1, 0), -1) == lv(1, 1)
    assert neighbor_step(poly, lv(1, 0), -2) == lv(2, 1)
    assert neighbor_step(poly, lv(2, 1), -2) == lv(-1, 0)
    for b in range(-2, 3):
        assert neighbor_step(poly, lv(1, 1), b) == apply_A(poly, lv(1, 1)) - b * lv(1, 0)


def test_neighbor_step_digit_range():
    poly = validate_poly(2, 3)
    with pytest.raises(DigitOutOfRange):
        neighbor_step(poly, lv(1, 0), 3)
    with pytest.raises(DigitOutOfRange):
        neighbor_step(poly, lv(1, 0), -3)


# === finite radix evaluation ===

def test_eval_radix_finite_fixture():
    # sum_{i>=1} w_i A^{-i} v with w = (-2,) at (p,q)=(2,3)
    poly = validate_poly(2, 3)
    assert eval_radix_finite(poly, [-2]) == RationalVec(F(4, 3), F(2, 3))
    assert eval_radix_finite(poly, []) == RationalVec(F(0), F(0))


def test_eval_radix_finite_longer_word():
    poly = validate_poly(0, 2)
    # A^{-1}v = (0,-1/2); A^{-3}v = (0,1/4)
    assert eval_radix_finite(poly, [1, 0, 1]) == RationalVec(F(0), F(-1, 4))


def test_eval_radix_finite_matches_float_sum():
    import numpy as np

    for p, q in [(2, 3), (-2, 2), (0, -2), (1, -4)]:
        poly = validate_poly(p, q)
        A = np.array([[0.0, -q], [1.0, -p]])
        Ainv = np.linalg.inv(A)
        word = [1, -(abs(q) - 1), 0, abs(q) - 1, 1]
        acc = np.zeros(2)
        drift = np.eye(2)
        for w in word:
            drift = drift @ Ainv
            acc = acc + w * (drift @ np.array([1.0, 0.0]))
        got = eval_radix_finite(poly, word)
        assert abs(float(got.gamma) - acc[0]) < 1e-12
        assert abs(float(got.delta) - acc[1]) < 1e-12


# === periodic radix evaluation ===

def test_periodic_word_requires_period():
    with pytest.raises(ValueError):
        PeriodicWord(period=())
    w = PeriodicWord(period=[1, 2], preperiod=[0])
    assert w.period == (1, 2) and w.preperiod == (0,)


def test_eval_radix_periodic_fixed_point():
    # x = A^{-1}(x + v) at (-2,2): x = v - Av
    poly = validate_poly(-2, 2)
    x = eval_radix_periodic(poly, PeriodicWord(period=[1]))
    assert x == RationalVec(F(1), F(-1))


def test_eval_radix_periodic_two_cycle():
    # digits 0,1 repeating at (0,-2): geometric series sums to v exactly
    poly = validate_poly(0, -2)
    x = eval_radix_periodic(poly, PeriodicWord(period=[0, 1]))
    assert x == RationalVec(F(1), F(0))


def test_eval_radix_periodic_with_preperiod():
    poly = validate_poly(0, -2)
    x = eval_radix_periodic(poly, PeriodicWord(preperiod=[1], period=[0, 1]))
    # A^{-1}(v + v) = 2 A^{-1} v = Av at this polynomial
    assert x == RationalVec(F(0), F(1))


def test_eval_radix_periodic_matches_truncation():
    for p, q in [(2, 3), (-2, 2), (0, -2), (-1, -4)]:
        poly = validate_poly(p, q)
        pw = PeriodicWord(preperiod=[1, 0], period=[abs(q) - 1, 1])
        exact = eval_radix_periodic(poly, pw)
        word = list(pw.preperiod) + list(pw.period) * 30
        approx = eval_radix_finite(poly, word)
        assert abs(float(exact.gamma - approx.gamma)) < 1e-9
        assert abs(float(exact.delta - approx.delta)) < 1e-9
