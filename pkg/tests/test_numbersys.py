"""Tests for radix representations and neighbor digit/delta forms."""

import pytest

from tilelab.algebra import LatticeVec, validate_poly
from tilelab.errors import NotANeighbor, NotANumberSystem
from tilelab.numbersys import (
    digit_expansion,
    eval_digits,
    is_number_system,
    neighbor_delta_form,
    neighbor_digit_form,
    represent,
)
from tilelab.tables import standard_grid


def lv(g, d):
    return LatticeVec(g, d)


# === the coefficient criterion ===

@pytest.mark.parametrize(
    "p,q,expected",
    [
        (0, 2, True),
        (1, 2, True),
        (-1, 2, True),
        (-1, 5, True),
        (2, 3, True),
        (2, 2, True),
        (-2, 2, False),
        (-2, 3, False),
        (0, -2, False),
        (1, -4, False),
        (-1, -4, False),
    ],
)
def test_is_number_system(p, q, expected):
    assert is_number_system(validate_poly(p, q)) == expected


# === division algorithm ===

def test_represent_fixtures():
    poly = validate_poly(2, 3)
    rep = represent(poly, lv(-1, 0))
    assert rep.digits == (2, 2, 1)
    assert rep.subject == lv(-1, 0)

    poly = validate_poly(-1, 2)
    assert represent(poly, lv(-1, 0)).digits == (1, 1, 0, 1)

    assert represent(validate_poly(0, 2), lv(0, 0)).digits == ()


def test_represent_leading_digit_nonzero():
    poly = validate_poly(1, 3)
    for g in range(-6, 7):
        for d in range(-6, 7):
            digs = represent(poly, lv(g, d)).digits
            if (g, d) != (0, 0):
                assert digs and digs[-1] != 0


def test_represent_round_trip_box():
    for poly in (validate_poly(2, 3), validate_poly(-1, 2), validate_poly(0, 5)):
        for g in range(-8, 9):
            for d in range(-8, 9):
                rep = represent(poly, lv(g, d))
                assert eval_digits(poly, rep.digits) == lv(g, d)
                assert all(0 <= a < poly.q for a in rep.digits)


def test_represent_requires_number_system():
    with pytest.raises(NotANumberSystem):
        represent(validate_poly(0, -2), lv(1, 0))


def test_digit_expansion_detects_cycles():
    # -v never terminates when p <= -2 or q < 0
    assert digit_expansion(validate_poly(-2, 3), lv(-1, 0)) is None
    assert digit_expansion(validate_poly(-2, 2), lv(-1, 0)) is None
    assert digit_expansion(validate_poly(0, -2), lv(-1, 0)) is None
    # but plenty of points still do
    assert digit_expansion(validate_poly(-2, 3), lv(1, 0)) == (1,)


def test_eval_digits():
    poly = validate_poly(2, 2)
    # A^2 v = -2Av - 2v ; A^3 v = 2Av + 4v
    assert eval_digits(poly, (0, 1, 1, 1)) == lv(2, 1)
    assert eval_digits(poly, ()) == lv(0, 0)


# === delta forms (mixed-sign, shortest) ===

def test_delta_form_fixtures():
    poly = validate_poly(2, 3)
    assert neighbor_delta_form(poly, lv(1, 0)) == (1,)
    assert neighbor_delta_form(poly, lv(-1, 0)) == (-1,)
    assert neighbor_delta_form(poly, lv(2, 1)) == (2, 1)
    assert neighbor_delta_form(poly, lv(-1, -1)) == (-1, -1)

    poly = validate_poly(2, 2)
    assert neighbor_delta_form(poly, lv(2, 1)) == (0, 1, 1, 1)
    assert neighbor_delta_form(poly, lv(-2, -1)) == (0, -1, -1, -1)

    poly = validate_poly(-2, 2)
    assert neighbor_delta_form(poly, lv(-2, 1)) == (0, 1, -1, 1)
    assert neighbor_delta_form(poly, lv(2, -1)) == (0, -1, 1, -1)


def test_delta_form_all_neighbors():
    from tilelab.neighbors import build_neighbor_graph

    for poly in standard_grid():
        g = build_neighbor_graph(poly)
        absq = abs(poly.q)
        for u in g.vertices:
            word = neighbor_delta_form(poly, u)
            assert word[-1] in (1, -1)
            assert all(abs(c) <= absq - 1 for c in word)
            assert eval_digits(poly, word) == u
            if poly.family.value in ("x^2+2x+2", "x^2-2x+2"):
                assert len(word) in (1, 2, 4)
            else:
                assert len(word) in (1, 2)


def test_delta_form_rejects_non_neighbor():
    with pytest.raises(NotANeighbor):
        neighbor_delta_form(validate_poly(2, 3), lv(3, 0))


# === digit forms (nonnegative digits, number systems only) ===

def test_digit_form_fixtures():
    assert neighbor_digit_form(validate_poly(0, 2), lv(-1, 0)) == (1, 0, 1)
    assert neighbor_digit_form(validate_poly(1, 2), lv(-1, -1)) == (1, 0, 1)
    assert neighbor_digit_form(validate_poly(2, 2), lv(-2, -1)) == (0, 1, 1)
    assert neighbor_digit_form(validate_poly(2, 3), lv(-1, 0)) == (2, 2, 1)
    assert neighbor_digit_form(validate_poly(-1, 2), lv(-1, 1)) == (1, 0, 1)


def test_digit_form_all_neighbors_round_trip():
    from tilelab.neighbors import build_neighbor_graph

    for poly in standard_grid():
        if not is_number_system(poly):
            continue
        g = build_neighbor_graph(poly)
        for u in g.vertices:
            word = neighbor_digit_form(poly, u)
            assert all(0 <= a < poly.q for a in word)
            assert eval_digits(poly, word) == u
            assert word == represent(poly, u).digits


def test_digit_form_errors():
    with pytest.raises(NotANumberSystem):
        neighbor_digit_form(validate_poly(-2, 3), lv(1, 0))
    with pytest.raises(NotANeighbor):
        neighbor_digit_form(validate_poly(2, 3), lv(0, 1))
