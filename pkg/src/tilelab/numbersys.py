"""Radix representations in the lattice number system (A, {0..q-1}).

With digits D = {0, ..., q-1} * v the pair (A, D) is a number system
exactly when p >= -1 and q >= 2: every lattice vector ell then has a
unique finite expansion ell = sum_i d_i A^i v.  The expansion comes from
repeated division: split ell = a*v + A*m with a = gamma mod |q|, emit a,
and recurse on m.  For non-number-systems the division orbit eventually
revisits a state, which ``digit_expansion`` reports as ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass

from tilelab.algebra import Family, LatticeVec, TilePoly, apply_A
from tilelab.errors import NonTermination, NotANeighbor, NotANumberSystem
from tilelab.neighbors import build_neighbor_graph

_DIVISION_CAP = 100_000


def is_number_system(poly: TilePoly) -> bool:
    """Coefficient criterion: digits {0..q-1} represent every vector."""
    return poly.p >= -1 and poly.q >= 2


@dataclass(frozen=True)
class Representation:
    """A finite expansion subject = sum_i digits[i] * A^i * v."""

    subject: LatticeVec
    digits: tuple


def digit_expansion(poly: TilePoly, ell: LatticeVec):
    """Digits of ``ell`` by repeated division, or ``None`` on a cycle.

    The division orbit is eventually confined to a ball (A^{-1} is a
    contraction up to a bounded shift), so it either reaches 0 or
    revisits a state; both happen in finitely many steps.
    """
    absq = abs(poly.q)
    seen = set()
    digits = []
    cur = ell
    while not cur.is_zero():
        if cur in seen:
            return None
        if len(seen) > _DIVISION_CAP:
            raise NonTermination("division orbit exceeded the safety cap")
        seen.add(cur)
        a = cur.gamma % absq
        beta = -((cur.gamma - a) // poly.q)
        cur = LatticeVec(cur.delta + poly.p * beta, beta)
        digits.append(a)
    return tuple(digits)


def represent(poly: TilePoly, ell: LatticeVec) -> Representation:
    """Unique finite expansion of ``ell``; requires a number system."""
    if not is_number_system(poly):
        raise NotANumberSystem(
            f"(p, q) = ({poly.p}, {poly.q}) fails p >= -1, q >= 2"
        )
    digits = digit_expansion(poly, ell)
    if digits is None:
        raise NonTermination(f"division of {ell} cycled in a number system")
    return Representation(ell, digits)


def eval_digits(poly: TilePoly, digits) -> LatticeVec:
    """Evaluate sum_i digits[i] * A^i * v (digits may be negative)."""
    acc = LatticeVec(0, 0)
    power = LatticeVec(1, 0)
    for c in digits:
        acc = acc + c * power
        power = apply_A(poly, power)
    return acc


def _require_neighbor(poly: TilePoly, ell: LatticeVec) -> None:
    g = build_neighbor_graph(poly)
    if ell not in g.vertices:
        raise NotANeighbor(f"{ell} is not a neighbor of the tile")


def neighbor_digit_form(poly: TilePoly, ell: LatticeVec) -> tuple:
    """Non-negative digit expansion of a neighbor (number systems only)."""
    if not is_number_system(poly):
        raise NotANumberSystem(
            f"(p, q) = ({poly.p}, {poly.q}) fails p >= -1, q >= 2"
        )
    _require_neighbor(poly, ell)
    return represent(poly, ell).digits


def neighbor_delta_form(poly: TilePoly, ell: LatticeVec) -> tuple:
    """Shortest mixed-sign expansion of a neighbor.

    Every neighbor is gamma*v + delta*Av with |delta| <= 1, so the form
    is (gamma,) or (gamma, delta) whenever |gamma| <= |q| - 1.  Only the
    outermost vertices of x^2 +- 2x + 2 need more: there |q| - 1 = 1
    forces a four-digit word.
    """
    _require_neighbor(poly, ell)
    g, d = ell.gamma, ell.delta
    if d == 0:
        return (g,)
    if abs(g) <= abs(poly.q) - 1:
        return (g, d)
    if poly.family is Family.PLUS_2X:
        return (0, 1, 1, 1) if d > 0 else (0, -1, -1, -1)
    if poly.family is Family.MINUS_2X:
        return (0, 1, -1, 1) if d > 0 else (0, -1, 1, -1)
    raise NotANeighbor(f"{ell} has no tabulated short form")
