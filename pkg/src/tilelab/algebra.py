"""Exact arithmetic for planar radix systems x^2 + p*x + q.

Everything here works over the lattice Z*v + Z*A*v, where A is the
companion matrix of x^2 + p*x + q acting by A*v = Av and
A*(Av) = -p*Av - q*v.  A vector gamma*v + delta*Av is stored as the
coordinate pair (gamma, delta).  In these coordinates

    A * (gamma, delta) = (-q*delta, gamma - p*delta)

and the inverse is computed with the adjugate over ``Fraction`` so all
radix evaluations stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from tilelab.errors import (
    DegenerateDeterminant,
    DigitOutOfRange,
    NotDiskLike,
    NotExpanding,
    SingularPeriod,
)


class Family(Enum):
    """Parameter families with distinct neighbor combinatorics."""

    PLUS_Q = "x^2+q"
    MINUS_Q = "x^2-q"
    PLUS_X = "x^2+x+q"
    MINUS_X = "x^2-x+q"
    PLUS_PX = "x^2+px+q"
    MINUS_PX = "x^2-px+q"
    PLUS_PX_MINUS_Q = "x^2+px-q"
    MINUS_PX_MINUS_Q = "x^2-px-q"
    PLUS_2X = "x^2+2x+2"
    MINUS_2X = "x^2-2x+2"


@dataclass(frozen=True)
class TilePoly:
    """A validated parameter pair (p, q) plus derived flags."""

    p: int
    q: int
    family: Family
    disk_like: bool
    expanding: bool
    similarity: bool


@dataclass(frozen=True)
class LatticeVec:
    """Integer vector gamma*v + delta*Av."""

    gamma: int
    delta: int

    def __add__(self, other: "LatticeVec") -> "LatticeVec":
        return LatticeVec(self.gamma + other.gamma, self.delta + other.delta)

    def __sub__(self, other: "LatticeVec") -> "LatticeVec":
        return LatticeVec(self.gamma - other.gamma, self.delta - other.delta)

    def __neg__(self) -> "LatticeVec":
        return LatticeVec(-self.gamma, -self.delta)

    def __rmul__(self, scalar: int) -> "LatticeVec":
        return LatticeVec(scalar * self.gamma, scalar * self.delta)

    def is_zero(self) -> bool:
        return self.gamma == 0 and self.delta == 0


@dataclass(frozen=True)
class RationalVec:
    """Rational vector gamma*v + delta*Av with exact coordinates."""

    gamma: Fraction
    delta: Fraction


@dataclass(frozen=True)
class PeriodicWord:
    """An eventually periodic digit word w = preperiod . (period)^infinity."""

    preperiod: tuple = ()
    period: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be non-empty")


def _classify(p: int, q: int) -> Family:
    if p == 2 and q == 2:
        return Family.PLUS_2X
    if p == -2 and q == 2:
        return Family.MINUS_2X
    if p == 0:
        return Family.PLUS_Q if q > 0 else Family.MINUS_Q
    if q > 0:
        if p == 1:
            return Family.PLUS_X
        if p == -1:
            return Family.MINUS_X
        return Family.PLUS_PX if p > 0 else Family.MINUS_PX
    return Family.PLUS_PX_MINUS_Q if p > 0 else Family.MINUS_PX_MINUS_Q


def validate_poly(p: int, q: int) -> TilePoly:
    """Validate (p, q) and classify it into its combinatorial family.

    Raises
    ------
    DegenerateDeterminant
        If |q| <= 1.
    NotExpanding
        If the companion matrix has an eigenvalue of modulus <= 1.
    NotDiskLike
        If 2|p| > |q + 2|, i.e. the tile is not homeomorphic to a disk.
    """
    if abs(q) <= 1:
        raise DegenerateDeterminant(f"|q| must be at least 2, got q={q}")
    if q >= 2:
        expanding = abs(p) <= q
    else:
        expanding = abs(p) <= abs(q + 2)
    if not expanding:
        raise NotExpanding(f"x^2{p:+d}x{q:+d} has a root of modulus <= 1")
    if 2 * abs(p) > abs(q + 2):
        raise NotDiskLike(
            f"2|p| <= |q+2| fails for (p, q) = ({p}, {q}); tile is not disk-like"
        )
    similarity = p == 0 or (q > 0 and p * p <= 4 * q)
    return TilePoly(p, q, _classify(p, q), True, True, similarity)


def apply_A(poly: TilePoly, x):
    """Apply the companion matrix: (gamma, delta) -> (-q*delta, gamma - p*delta).

    Works on both ``LatticeVec`` and ``RationalVec`` and returns the same
    type it was given.
    """
    cls = LatticeVec if isinstance(x, LatticeVec) else RationalVec
    return cls(-poly.q * x.delta, x.gamma - poly.p * x.delta)


def apply_A_inverse(poly: TilePoly, x) -> RationalVec:
    """Apply A^{-1} exactly; the result is rational with denominator q."""
    g = Fraction(x.gamma)
    d = Fraction(x.delta)
    return RationalVec((-poly.p * g + poly.q * d) / poly.q, -g / poly.q)


def check_digit(poly: TilePoly, b: int) -> None:
    """Ensure |b| <= |q| - 1, the admissible label range."""
    bound = abs(poly.q) - 1
    if abs(b) > bound:
        raise DigitOutOfRange(f"label {b} outside [-{bound}, {bound}]")


def neighbor_step(poly: TilePoly, ell: LatticeVec, b: int) -> LatticeVec:
    """One edge step of the neighbor-candidate map: ell -> A*ell - b*v."""
    check_digit(poly, b)
    return apply_A(poly, ell) - b * LatticeVec(1, 0)


def eval_radix_finite(poly: TilePoly, word) -> RationalVec:
    """Evaluate sum_{i=1..n} w_i * A^{-i} v exactly.

    ``word`` lists w_1 first.  Evaluation runs from the deepest digit
    outward, so only one A^{-1} application per digit is needed.
    """
    x = RationalVec(Fraction(0), Fraction(0))
    for w in reversed(tuple(word)):
        shifted = RationalVec(x.gamma + w, x.delta)
        x = apply_A_inverse(poly, shifted)
    return x


def _power_columns(poly: TilePoly, n: int):
    """Columns of A^n as integer pairs (A^n v, A^n Av)."""
    c0, c1 = LatticeVec(1, 0), LatticeVec(0, 1)
    for _ in range(n):
        c0 = apply_A(poly, c0)
        c1 = apply_A(poly, c1)
    return c0, c1


def eval_radix_periodic(poly: TilePoly, word: PeriodicWord) -> RationalVec:
    """Evaluate an eventually periodic radix word exactly.

    The periodic tail y = sum over repetitions of the period solves
    (A^n - I) y = sum_{j=1..n} c_j A^{n-j} v, a 2x2 rational system that
    is always regular because A is expanding.  The preperiod is then
    folded in one digit at a time.
    """
    n = len(word.period)
    rhs = LatticeVec(0, 0)
    for c in word.period:
        rhs = apply_A(poly, rhs) + c * LatticeVec(1, 0)
    c0, c1 = _power_columns(poly, n)
    # matrix A^n - I with columns c0, c1
    m00, m10 = c0.gamma - 1, c0.delta
    m01, m11 = c1.gamma, c1.delta - 1
    det = m00 * m11 - m01 * m10
    if det == 0:
        raise SingularPeriod(f"period of length {n} yields singular system")
    y = RationalVec(
        Fraction(rhs.gamma * m11 - rhs.delta * m01, det),
        Fraction(rhs.delta * m00 - rhs.gamma * m10, det),
    )
    x = y
    for a in reversed(word.preperiod):
        x = apply_A_inverse(poly, RationalVec(x.gamma + a, x.delta))
    return x
