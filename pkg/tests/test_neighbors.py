"""Tests for neighbor-graph construction, sign paths, and path evaluation."""

from fractions import Fraction as F

import pytest

from tilelab.algebra import (
    LatticeVec,
    PeriodicWord,
    RationalVec,
    validate_poly,
)
from tilelab.errors import BoxExhausted, InvalidPath, UnknownVertex
from tilelab.neighbors import (
    Sign,
    SignPath,
    accepts,
    boundary_point_from_path,
    build_neighbor_graph,
    find_sign_path,
    graph_to_dot,
    graph_to_text,
    origin_on_boundary,
    vertex_name,
)
from tilelab.tables import reference_neighbor_graph, standard_grid


def lv(g, d):
    return LatticeVec(g, d)


def edge_set(g):
    return {(g.vertices[e.src], g.vertices[e.dst], e.label) for e in g.edges}


# === construction ===

def test_vertex_counts():
    for poly in standard_grid():
        g = build_neighbor_graph(poly)
        assert len(g.vertices) == (8 if poly.p == 0 else 6)
        assert len(set(g.vertices)) == len(g.vertices)


def test_build_matches_reference_tables():
    for poly in standard_grid():
        built = build_neighbor_graph(poly)
        ref = reference_neighbor_graph(poly)
        assert set(built.vertices) == set(ref.vertices), poly
        assert edge_set(built) == edge_set(ref), poly


def test_symmetry_of_vertex_set():
    for poly in standard_grid():
        verts = set(build_neighbor_graph(poly).vertices)
        assert {-u for u in verts} == verts


def test_specific_edges_2_3():
    g = build_neighbor_graph(validate_poly(2, 3))
    es = edge_set(g)
    assert set(g.vertices) == {
        lv(1, 0), lv(1, 1), lv(2, 1), lv(-1, 0), lv(-1, -1), lv(-2, -1),
    }
    assert (lv(1, 0), lv(1, 1), -1) in es
    assert (lv(1, 0), lv(2, 1), -2) in es
    assert (lv(2, 1), lv(-1, 0), -2) in es
    assert (lv(-2, -1), lv(1, 0), 2) in es
    assert len(es) == 10


def test_specific_edges_minus2_2():
    g = build_neighbor_graph(validate_poly(-2, 2))
    es = edge_set(g)
    assert (lv(1, 0), lv(-1, 1), 1) in es
    assert (lv(-1, 1), lv(-1, 1), -1) in es   # self loop
    assert (lv(-1, 1), lv(-2, 1), 0) in es
    assert (lv(2, -1), lv(1, 0), 1) in es
    assert len(es) == 8


def test_corrected_labels_minus1_q():
    # x^2 - x + q: the unit-vertex cross edges carry labels +1 / -1
    for q in (2, 3, 5):
        es = edge_set(build_neighbor_graph(validate_poly(-1, q)))
        assert (lv(1, 0), lv(-1, 1), 1) in es
        assert (lv(-1, 0), lv(1, -1), -1) in es
        assert (lv(1, 0), lv(-1, 1), -1) not in es


def test_deterministic_automaton():
    # out-labels from any vertex are distinct: label-following is a function
    for poly in standard_grid():
        g = build_neighbor_graph(poly)
        for i in range(len(g.vertices)):
            labels = [e.label for e in g.out_edges(i)]
            assert len(labels) == len(set(labels))
            assert labels, "every vertex keeps an outgoing edge"


def test_box_exhausted_guard():
    with pytest.raises(BoxExhausted):
        build_neighbor_graph(validate_poly(2, 3), _box=(1, 1), _retries=0)


# === origin on boundary / sign paths ===

def test_origin_on_boundary_matches_arithmetic():
    for poly in standard_grid():
        g = build_neighbor_graph(poly)
        inside = poly.p >= -1 and poly.q >= 2
        assert origin_on_boundary(g) == (not inside), poly


@pytest.mark.parametrize(
    "p,q,sign,start,period",
    [
        # x^2-2x+2
        (-2, 2, Sign.NON_POSITIVE, (-1, 1), (-1,)),
        (-2, 2, Sign.NON_NEGATIVE, (1, -1), (1,)),
        # x^2-q
        (0, -2, Sign.NON_NEGATIVE, (1, 0), (0, 1)),
        (0, -3, Sign.NON_NEGATIVE, (1, 0), (0, 2)),
        (0, -5, Sign.NON_NEGATIVE, (1, 0), (0, 4)),
        (0, -3, Sign.NON_POSITIVE, (-1, 0), (0, -2)),
        # x^2-px+q
        (-2, 3, Sign.NON_POSITIVE, (-1, 1), (-2,)),
        (-2, 4, Sign.NON_POSITIVE, (-1, 1), (-3,)),
        (-3, 5, Sign.NON_POSITIVE, (-2, 1), (-3,)),
        (-2, 3, Sign.NON_NEGATIVE, (1, -1), (2,)),
        # x^2+px-q
        (1, -4, Sign.NON_NEGATIVE, (2, 1), (2,)),
        (2, -6, Sign.NON_NEGATIVE, (3, 1), (3,)),
        (1, -4, Sign.NON_POSITIVE, (-2, -1), (-2,)),
        # x^2-px-q
        (-1, -4, Sign.NON_NEGATIVE, (1, 0), (1, 3)),
        (-2, -6, Sign.NON_NEGATIVE, (1, 0), (2, 5)),
        (-1, -4, Sign.NON_POSITIVE, (-1, 0), (-1, -3)),
    ],
)
def test_find_sign_path_fixtures(p, q, sign, start, period):
    g = build_neighbor_graph(validate_poly(p, q))
    sp = find_sign_path(g, sign)
    assert sp is not None
    assert sp.start == lv(*start)
    assert sp.labels.preperiod == ()
    assert sp.labels.period == period
    assert sp.sign is sign


def test_find_sign_path_absent_for_number_systems():
    for p, q in [(0, 2), (1, 3), (-1, 5), (2, 3), (2, 2)]:
        g = build_neighbor_graph(validate_poly(p, q))
        assert find_sign_path(g, Sign.NON_NEGATIVE) is None
        assert find_sign_path(g, Sign.NON_POSITIVE) is None


# === acceptance of label words ===

def test_accepts_walks():
    g = build_neighbor_graph(validate_poly(2, 3))
    assert accepts(g, lv(1, 0), [-1])
    assert accepts(g, lv(1, 0), [-1, -2])       # v -> u2 -> -u2
    assert accepts(g, lv(1, 0), [-2, -2, 1])    # v -> u3 -> -v -> -u2
    assert not accepts(g, lv(1, 0), [2])
    assert not accepts(g, lv(1, 0), [-1, -1, -1])
    assert accepts(g, lv(1, 0), [])


def test_accepts_unknown_vertex():
    g = build_neighbor_graph(validate_poly(2, 3))
    with pytest.raises(UnknownVertex):
        accepts(g, lv(5, 5), [0])


# === boundary points from sign paths ===

def test_boundary_point_twin_dragon_origin():
    g = build_neighbor_graph(validate_poly(-2, 2))
    sp = find_sign_path(g, Sign.NON_POSITIVE)
    x = boundary_point_from_path(g, sp)
    assert x == RationalVec(F(0), F(0))


def test_boundary_point_two_sided_consistency():
    # x from the nonneg split and x - ell from the negated split agree
    from tilelab.algebra import eval_radix_periodic

    for p, q in [(0, -2), (0, -3), (-1, -4), (-2, 3), (1, -4)]:
        poly = validate_poly(p, q)
        g = build_neighbor_graph(poly)
        for sign in (Sign.NON_POSITIVE, Sign.NON_NEGATIVE):
            sp = find_sign_path(g, sign)
            assert sp is not None
            x = boundary_point_from_path(g, sp)
            pos = PeriodicWord(
                preperiod=[max(b, 0) for b in sp.labels.preperiod],
                period=[max(b, 0) for b in sp.labels.period],
            )
            neg = PeriodicWord(
                preperiod=[max(-b, 0) for b in sp.labels.preperiod],
                period=[max(-b, 0) for b in sp.labels.period],
            )
            assert x == eval_radix_periodic(poly, pos)
            diff = eval_radix_periodic(poly, neg)
            assert x.gamma - diff.gamma == sp.start.gamma
            assert x.delta - diff.delta == sp.start.delta


def test_boundary_point_invalid_path():
    g = build_neighbor_graph(validate_poly(-2, 2))
    bad = SignPath(lv(-1, 1), PeriodicWord(period=[0]), Sign.NON_POSITIVE)
    # u2 -[0]-> u3 does not return to u2, so [0] is not a cycle at u2
    with pytest.raises(InvalidPath):
        boundary_point_from_path(g, bad)
    with pytest.raises(UnknownVertex):
        boundary_point_from_path(
            g, SignPath(lv(9, 9), PeriodicWord(period=[0]), Sign.NON_POSITIVE)
        )


# === exports ===

def test_vertex_name_formatting():
    assert vertex_name(lv(1, 0)) == "v"
    assert vertex_name(lv(-1, 0)) == "-v"
    assert vertex_name(lv(0, 1)) == "Av"
    assert vertex_name(lv(0, -1)) == "-Av"
    assert vertex_name(lv(2, 1)) == "Av+2v"
    assert vertex_name(lv(-2, -1)) == "-Av-2v"
    assert vertex_name(lv(-1, 1)) == "Av-v"
    assert vertex_name(lv(1, -1)) == "-Av+v"


def test_graph_text_format():
    poly = validate_poly(2, 3)
    g = build_neighbor_graph(poly)
    text = graph_to_text(g)
    lines = text.strip().splitlines()
    assert lines[0] == "2 3 x^2+px+q 6"
    assert len(lines) == 1 + 6 + len(g.edges)
    # vertex lines: "idx gamma delta"
    assert lines[1] == "0 1 0"
    # deterministic
    assert text == graph_to_text(build_neighbor_graph(poly))


def test_graph_dot_format():
    g = build_neighbor_graph(validate_poly(-2, 2))
    dot = graph_to_dot(g)
    assert dot.startswith("digraph")
    assert '"Av-v" -> "Av-2v" [label="0"]' in dot
