"""Reference tables: neighbor graphs, translation sets, contact matrices.

The data below was transcribed family by family and is kept independent
of the search code in :mod:`tilelab.neighbors`, so that the two can be
checked against each other.  Vertices follow the canonical order of
``canonical_vertex_order``; ranges are inclusive and parametrized by
P = |p| and Q = |q|.
"""

from __future__ import annotations

from tilelab.algebra import Family, LatticeVec, TilePoly, validate_poly
from tilelab.gifs import ContactMatrix
from tilelab.neighbors import Edge, NeighborGraph, canonical_vertex_order
from tilelab.spectral import IntPoly

_GRID_PAIRS = (
    (0, 2), (0, 3), (0, 5),
    (0, -2), (0, -3), (0, -5),
    (1, 2), (1, 3), (1, 5),
    (-1, 2), (-1, 3), (-1, 5),
    (2, 3), (2, 4), (3, 5),
    (-2, 3), (-2, 4), (-3, 5),
    (1, -4), (1, -5), (2, -6),
    (-1, -4), (-1, -5), (-2, -6),
    (2, 2), (-2, 2),
)

_REPRESENTATIVE_PAIRS = (
    (0, 2), (0, -2), (1, 2), (-1, 2), (2, 3),
    (-2, 3), (1, -4), (-1, -4), (2, 2), (-2, 2),
)


def standard_grid() -> tuple:
    """Two or three smallest instances of every family, 26 in total."""
    return tuple(validate_poly(p, q) for p, q in _GRID_PAIRS)


def family_representatives() -> tuple:
    """The smallest-|q| instance of each of the ten families."""
    return tuple(validate_poly(p, q) for p, q in _REPRESENTATIVE_PAIRS)


def _rng(a: int, b: int) -> tuple:
    return tuple(range(a, b + 1))


def _family_data(poly: TilePoly):
    """Edges, translation sets, and contact rows for poly's family.

    Edges are (src_vector, dst_vector, label); translation sets map
    (src_vector, dst_vector) to the inclusive tuple of shifts; contact
    rows follow the canonical vertex order.
    """
    P, Q = abs(poly.p), abs(poly.q)
    V = LatticeVec
    v, Av = V(1, 0), V(0, 1)
    fam = poly.family

    if fam is Family.PLUS_Q:
        avmv, avpv = V(-1, 1), V(1, 1)
        edges = [
            (v, avmv, 1), (v, Av, 0), (v, avpv, -1),
            (Av, -v, -(Q - 1)),
            (-v, -avmv, -1), (-v, -Av, 0), (-v, -avpv, 1),
            (-Av, v, Q - 1),
            (avmv, -avpv, -(Q - 1)),
            (-avpv, -avmv, Q - 1),
            (-avmv, avpv, Q - 1),
            (avpv, avmv, -(Q - 1)),
        ]
        trans = {
            (v, avmv): _rng(1, Q - 1), (v, Av): _rng(0, Q - 1),
            (v, avpv): _rng(0, Q - 2),
            (Av, -v): (0,), (avmv, -avpv): (0,), (avpv, avmv): (0,),
            (-v, -avmv): _rng(0, Q - 2), (-v, -Av): _rng(0, Q - 1),
            (-v, -avpv): _rng(1, Q - 1),
            (-Av, v): (Q - 1,), (-avpv, -avmv): (Q - 1,),
            (-avmv, avpv): (Q - 1,),
        }
        rows = (
            (0, Q, 0, 0, Q - 1, 0, 0, Q - 1),
            (0, 0, 1, 0, 0, 0, 0, 0),
            (0, 0, 0, Q, 0, Q - 1, Q - 1, 0),
            (1, 0, 0, 0, 0, 0, 0, 0),
            (0, 0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 0, 0, 1, 0),
            (0, 0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 1, 0, 0, 0),
        )
        return edges, trans, rows

    if fam is Family.MINUS_Q:
        avmv, avpv = V(-1, 1), V(1, 1)
        edges = [
            (v, avmv, 1), (v, Av, 0), (v, avpv, -1),
            (Av, v, Q - 1),
            (avmv, -avmv, Q - 1),
            (avpv, avpv, Q - 1),
            (-v, -avmv, -1), (-v, -Av, 0), (-v, -avpv, 1),
            (-Av, -v, -(Q - 1)),
            (-avmv, avmv, -(Q - 1)),
            (-avpv, -avpv, -(Q - 1)),
        ]
        trans = {
            (v, avmv): _rng(1, Q - 1), (v, Av): _rng(0, Q - 1),
            (v, avpv): _rng(0, Q - 2),
            (Av, v): (Q - 1,), (avmv, -avmv): (Q - 1,),
            (avpv, avpv): (Q - 1,),
            (-v, -avmv): _rng(0, Q - 2), (-v, -Av): _rng(0, Q - 1),
            (-v, -avpv): _rng(1, Q - 1),
            (-Av, -v): (0,), (-avmv, avmv): (0,), (-avpv, -avpv): (0,),
        }
        rows = (
            (0, Q, 0, 0, Q - 1, 0, Q - 1, 0),
            (1, 0, 0, 0, 0, 0, 0, 0),
            (0, 0, 0, Q, 0, Q - 1, 0, Q - 1),
            (0, 0, 1, 0, 0, 0, 0, 0),
            (0, 0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0, 0),
            (0, 0, 0, 0, 0, 0, 1, 0),
            (0, 0, 0, 0, 0, 0, 0, 1),
        )
        return edges, trans, rows

    if fam is Family.PLUS_X:
        u2 = V(1, 1)
        edges = [
            (v, Av, 0), (v, u2, -1),
            (Av, -u2, -(Q - 1)),
            (u2, -v, -(Q - 1)),
            (-v, -Av, 0), (-v, -u2, 1),
            (-Av, u2, Q - 1),
            (-u2, v, Q - 1),
        ]
        trans = {
            (v, Av): _rng(0, Q - 1), (v, u2): _rng(0, Q - 2),
            (Av, -u2): (0,), (u2, -v): (0,),
            (-v, -Av): _rng(0, Q - 1), (-v, -u2): _rng(1, Q - 1),
            (-Av, u2): (Q - 1,), (-u2, v): (Q - 1,),
        }
        rows = (
            (0, Q, Q - 1, 0, 0, 0),
            (0, 0, 0, 0, 0, 1),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, Q, Q - 1),
            (0, 0, 1, 0, 0, 0),
            (1, 0, 0, 0, 0, 0),
        )
        return edges, trans, rows

    if fam is Family.MINUS_X:
        u2 = V(-1, 1)
        edges = [
            (v, Av, 0), (v, u2, 1),
            (Av, u2, -(Q - 1)),
            (u2, -v, -(Q - 1)),
            (-v, -Av, 0), (-v, -u2, -1),
            (-Av, -u2, Q - 1),
            (-u2, v, Q - 1),
        ]
        trans = {
            (v, Av): _rng(0, Q - 1), (v, u2): _rng(1, Q - 1),
            (Av, u2): (0,), (u2, -v): (0,),
            (-v, -Av): _rng(0, Q - 1), (-v, -u2): _rng(0, Q - 2),
            (-Av, -u2): (Q - 1,), (-u2, v): (Q - 1,),
        }
        rows = (
            (0, Q, Q - 1, 0, 0, 0),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, Q, Q - 1),
            (0, 0, 0, 0, 0, 1),
            (1, 0, 0, 0, 0, 0),
        )
        return edges, trans, rows

    if fam is Family.PLUS_PX:
        u2, u3 = V(P - 1, 1), V(P, 1)
        edges = [
            (v, u2, -(P - 1)), (v, u3, -P),
            (u2, -u2, -(Q - P + 1)), (u2, -u3, -(Q - P)),
            (u3, -v, -(Q - 1)),
            (-v, -u2, P - 1), (-v, -u3, P),
            (-u2, u2, Q - P + 1), (-u2, u3, Q - P),
            (-u3, v, Q - 1),
        ]
        trans = {
            (v, u2): _rng(0, Q - P), (v, u3): _rng(0, Q - P - 1),
            (u2, -u2): _rng(0, P - 2), (u2, -u3): _rng(0, P - 1),
            (u3, -v): (0,),
            (-v, -u2): _rng(P - 1, Q - 1), (-v, -u3): _rng(P, Q - 1),
            (-u2, u2): _rng(Q - P + 1, Q - 1), (-u2, u3): _rng(Q - P, Q - 1),
            (-u3, v): (Q - 1,),
        }
        rows = (
            (0, Q - P + 1, Q - P, 0, 0, 0),
            (0, 0, 0, 0, P - 1, P),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, Q - P + 1, Q - P),
            (0, P - 1, P, 0, 0, 0),
            (1, 0, 0, 0, 0, 0),
        )
        return edges, trans, rows

    if fam is Family.MINUS_PX:
        u2, u3 = V(-(P - 1), 1), V(-P, 1)
        edges = [
            (v, u2, P - 1), (v, u3, P),
            (u2, u2, -(Q - P + 1)), (u2, u3, -(Q - P)),
            (u3, -v, -(Q - 1)),
            (-v, -u2, -(P - 1)), (-v, -u3, -P),
            (-u2, -u2, Q - P + 1), (-u2, -u3, Q - P),
            (-u3, v, Q - 1),
        ]
        trans = {
            (v, u2): _rng(P - 1, Q - 1), (v, u3): _rng(P, Q - 1),
            (u2, u2): _rng(0, P - 2), (u2, u3): _rng(0, P - 1),
            (u3, -v): (0,),
            (-v, -u2): _rng(0, Q - P), (-v, -u3): _rng(0, Q - P - 1),
            (-u2, -u2): _rng(Q - P + 1, Q - 1), (-u2, -u3): _rng(Q - P, Q - 1),
            (-u3, v): (Q - 1,),
        }
        rows = (
            (0, Q - P + 1, Q - P, 0, 0, 0),
            (0, P - 1, P, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, Q - P + 1, Q - P),
            (0, 0, 0, 0, P - 1, P),
            (1, 0, 0, 0, 0, 0),
        )
        return edges, trans, rows

    if fam is Family.PLUS_PX_MINUS_Q:
        u2, u3 = V(P, 1), V(P + 1, 1)
        edges = [
            (v, u2, -P), (v, u3, -(P + 1)),
            (u2, v, Q - 1),
            (u3, u2, Q - P), (u3, u3, Q - P - 1),
            (-v, -u2, P), (-v, -u3, P + 1),
            (-u2, -v, -(Q - 1)),
            (-u3, -u2, -(Q - P)), (-u3, -u3, -(Q - P - 1)),
        ]
        trans = {
            (v, u2): _rng(0, Q - P - 1), (v, u3): _rng(0, Q - P - 2),
            (u2, v): (Q - 1,),
            (u3, u2): _rng(Q - P, Q - 1), (u3, u3): _rng(Q - P - 1, Q - 1),
            (-v, -u2): _rng(P, Q - 1), (-v, -u3): _rng(P + 1, Q - 1),
            (-u2, -v): (0,),
            (-u3, -u2): _rng(0, P - 1), (-u3, -u3): _rng(0, P),
        }
        rows = (
            (0, Q - P, Q - P - 1, 0, 0, 0),
            (1, 0, 0, 0, 0, 0),
            (0, P, P + 1, 0, 0, 0),
            (0, 0, 0, 0, Q - P, Q - P - 1),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, P, P + 1),
        )
        return edges, trans, rows

    if fam is Family.MINUS_PX_MINUS_Q:
        u2, u3 = V(-P, 1), V(-(P + 1), 1)
        edges = [
            (v, u2, P), (v, u3, P + 1),
            (u2, v, Q - 1),
            (u3, -u2, Q - P), (u3, -u3, Q - P - 1),
            (-v, -u2, -P), (-v, -u3, -(P + 1)),
            (-u2, -v, -(Q - 1)),
            (-u3, u2, -(Q - P)), (-u3, u3, -(Q - P - 1)),
        ]
        trans = {
            (v, u2): _rng(P, Q - 1), (v, u3): _rng(P + 1, Q - 1),
            (u2, v): (Q - 1,),
            (u3, -u2): _rng(Q - P, Q - 1), (u3, -u3): _rng(Q - P - 1, Q - 1),
            (-v, -u2): _rng(0, Q - P - 1), (-v, -u3): _rng(0, Q - P - 2),
            (-u2, -v): (0,),
            (-u3, u2): _rng(0, P - 1), (-u3, u3): _rng(0, P),
        }
        rows = (
            (0, Q - P, Q - P - 1, 0, 0, 0),
            (1, 0, 0, 0, 0, 0),
            (0, 0, 0, 0, P, P + 1),
            (0, 0, 0, 0, Q - P, Q - P - 1),
            (0, 0, 0, 1, 0, 0),
            (0, P, P + 1, 0, 0, 0),
        )
        return edges, trans, rows

    if fam is Family.PLUS_2X:
        u2, u3 = V(1, 1), V(2, 1)
        edges = [
            (v, u2, -1),
            (u2, -u2, -1), (u2, -u3, 0),
            (u3, -v, -1),
            (-v, -u2, 1),
            (-u2, u2, 1), (-u2, u3, 0),
            (-u3, v, 1),
        ]
        trans = {
            (v, u2): (0,),
            (u2, -u2): (0,), (u2, -u3): (0, 1),
            (u3, -v): (0,),
            (-v, -u2): (1,),
            (-u2, u2): (1,), (-u2, u3): (0, 1),
            (-u3, v): (1,),
        }
        rows = (
            (0, 1, 0, 0, 0, 0),
            (0, 0, 0, 0, 1, 2),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0),
            (0, 1, 2, 0, 0, 0),
            (1, 0, 0, 0, 0, 0),
        )
        return edges, trans, rows

    # Family.MINUS_2X
    u2, u3 = V(-1, 1), V(-2, 1)
    edges = [
        (v, u2, 1),
        (u2, u2, -1), (u2, u3, 0),
        (u3, -v, -1),
        (-v, -u2, -1),
        (-u2, -u2, 1), (-u2, -u3, 0),
        (-u3, v, 1),
    ]
    trans = {
        (v, u2): (1,),
        (u2, u2): (0,), (u2, u3): (0, 1),
        (u3, -v): (0,),
        (-v, -u2): (0,),
        (-u2, -u2): (1,), (-u2, -u3): (0, 1),
        (-u3, v): (1,),
    }
    rows = (
        (0, 1, 0, 0, 0, 0),
        (0, 1, 2, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1, 2),
        (1, 0, 0, 0, 0, 0),
    )
    return edges, trans, rows


def reference_neighbor_graph(poly: TilePoly) -> NeighborGraph:
    """The tabulated neighbor graph, independent of the box search."""
    vertices = canonical_vertex_order(poly)
    index = {u: i for i, u in enumerate(vertices)}
    raw, _, _ = _family_data(poly)
    edges = sorted(
        (Edge(index[s], index[d], lab) for s, d, lab in raw),
        key=lambda e: (e.src, e.label),
    )
    return NeighborGraph(poly, vertices, tuple(edges))


def reference_translation_sets(poly: TilePoly) -> dict:
    """Tabulated boundary-map shifts keyed by (source, target) vertices."""
    _, trans, _ = _family_data(poly)
    return dict(trans)


def reference_contact_matrix(poly: TilePoly) -> ContactMatrix:
    """The tabulated contact matrix in canonical vertex order."""
    _, _, rows = _family_data(poly)
    return ContactMatrix(canonical_vertex_order(poly), tuple(rows))


def reference_char_factors(poly: TilePoly):
    """Closed-form factorization of the contact characteristic polynomial.

    Returns a tuple of ``IntPoly`` factors (lowest coefficient first)
    whose product equals det(x*I - M), or ``None`` for the families
    x^2 +- px - q, where no closed form is tabulated.
    """
    P, Q = abs(poly.p), abs(poly.q)
    if poly.family is Family.PLUS_Q:
        return (
            IntPoly((-Q, 0, 1)), IntPoly((Q, 0, 1)),
            IntPoly((-1, 1)), IntPoly((1, 1)), IntPoly((1, 0, 1)),
        )
    if poly.family is Family.MINUS_Q:
        return (
            IntPoly((-Q, 0, 1)), IntPoly((-Q, 0, 1)),
            IntPoly((1, 1)), IntPoly((-1, 1)), IntPoly((-1, 1)), IntPoly((-1, 1)),
        )
    if poly.q < 0:
        return None
    cubic = IntPoly((-Q, -(Q - P), -(P - 1), 1))
    if poly.p > 0:
        return (IntPoly((-1, 1)), IntPoly((Q, P, 1)), cubic)
    return (IntPoly((1, 1)), IntPoly((Q, -P, 1)), cubic)
