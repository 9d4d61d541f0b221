"""Characteristic polynomials, spectral radii, and boundary dimensions.

The spectral radius of a non-negative integer matrix is located as the
largest real root of its characteristic polynomial (Perron-Frobenius
guarantees that root is the radius).  Roots are isolated with an exact
Sturm chain over ``Fraction`` and narrowed by bisection, because the
radius can be a repeated root where float polishing is unreliable; a
floating-point power iteration then cross-checks the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from tilelab.algebra import TilePoly
from tilelab.errors import ComputationError, NegativeEntry
from tilelab.gifs import contact_matrix, is_irreducible
from tilelab.neighbors import build_neighbor_graph


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients listed lowest degree first."""

    coeffs: tuple

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        if not cs:
            cs = (0,)
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))


def _matrix_rows(m) -> tuple:
    entries = getattr(m, "entries", m)
    return tuple(tuple(int(x) for x in row) for row in entries)


def char_poly(m) -> IntPoly:
    """det(x*I - M) via the Faddeev-LeVerrier recurrence, exactly."""
    rows = _matrix_rows(m)
    n = len(rows)
    M = [[Fraction(x) for x in row] for row in rows]

    def mat_mul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    def trace(a):
        return sum(a[i][i] for i in range(n))

    coeffs_high = [Fraction(1)]     # leading coefficient of x^n
    Mk = [row[:] for row in M]
    for k in range(1, n + 1):
        ck = -trace(Mk) / k
        coeffs_high.append(ck)
        if k == n:
            break
        shifted = [row[:] for row in Mk]
        for i in range(n):
            shifted[i][i] += ck
        Mk = mat_mul(M, shifted)
    low_first = list(reversed(coeffs_high))
    for c in low_first:
        if c.denominator != 1:
            raise ComputationError("characteristic polynomial not integral")
    return IntPoly(tuple(int(c) for c in low_first))


# --- exact polynomial helpers over Fraction, coefficients lowest first ---

def _fr(poly: IntPoly):
    return [Fraction(c) for c in poly.coeffs]


def _trim(cs):
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs


def _deriv(cs):
    return _trim([i * c for i, c in enumerate(cs)][1:]) or [Fraction(0)]


def _rem(a, b):
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        da, la = len(a) - 1, a[-1]
        if la == 0:
            a.pop()
            continue
        f = la / lb
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a.pop()
    return _trim(a) if a else [Fraction(0)]


def _gcd(a, b):
    a, b = _trim(a[:]), _trim(b[:])
    while any(b):
        a, b = b, _rem(a, b)
    lead = a[-1]
    return [c / lead for c in a] if lead else a


def _exact_div(a, b):
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        da, la = len(a) - 1, a[-1]
        f = la / lb
        out[da - db] = f
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a.pop()
    return _trim(out)


def _eval(cs, x):
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sturm_chain(cs):
    chain = [cs, _deriv(cs)]
    while any(chain[-1]) and len(chain[-1]) > 1:
        r = _rem(chain[-2], chain[-1])
        chain.append([-c for c in r])
    if not any(chain[-1]):
        chain.pop()
    return chain


def _sign_changes(chain, x):
    signs = []
    for cs in chain:
        val = _eval(cs, x)
        if val:
            signs.append(1 if val > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def largest_real_root(poly: IntPoly) -> float:
    """Largest real root of an integer polynomial, to about 1e-13.

    Works on the square-free part so repeated roots are harmless, then
    bisects with exact Sturm counts of roots in half-open intervals.
    """
    cs = _trim(_fr(poly))
    if len(cs) == 1:
        raise ComputationError("constant polynomial has no roots")
    sf = _exact_div(cs, _gcd(cs, _deriv(cs)))
    chain = _sturm_chain(sf)
    bound = 1 + max(abs(c / sf[-1]) for c in sf[:-1]) if len(sf) > 1 else Fraction(1)
    lo, hi = -bound - 1, bound + 1
    if _sign_changes(chain, lo) - _sign_changes(chain, hi) < 1:
        raise ComputationError("polynomial has no real roots")
    changes_hi = _sign_changes(chain, hi)
    while hi - lo > Fraction(1, 10**14):
        mid = (lo + hi) / 2
        if _sign_changes(chain, mid) - changes_hi >= 1:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def _power_iteration_radius(rows) -> float:
    n = len(rows)
    M = np.array(rows, dtype=float)
    x = np.ones(n)
    s = 1.0
    for _ in range(500):
        y = M @ x + x
        s = float(np.max(np.abs(y)))
        if s == 0.0:
            return 0.0
        x = y / s
    return s - 1.0


def spectral_radius(m) -> float:
    """Perron root of a non-negative matrix, exact isolation + crosscheck."""
    rows = _matrix_rows(m)
    for row in rows:
        for x in row:
            if x < 0:
                raise NegativeEntry(f"matrix entry {x} is negative")
    if all(x == 0 for row in rows for x in row):
        return 0.0
    rho = largest_real_root(char_poly(rows))
    check = _power_iteration_radius(rows)
    if abs(check - rho) > 1e-6 * max(1.0, rho):
        raise ComputationError(
            f"spectral radius cross-check failed: {rho} vs {check}"
        )
    return rho


def dimension_cubic(p: int, q: int) -> IntPoly:
    """The cubic whose largest root gives the boundary dimension."""
    P, Q = abs(p), abs(q)
    if q > 0:
        return IntPoly((-Q, -(Q - P), -(P - 1), 1))
    return IntPoly((Q, -(Q - P), -(P + 1), 1))


def cubic_largest_root(p: int, q: int) -> float:
    return largest_real_root(dimension_cubic(p, q))


@dataclass(frozen=True)
class DimensionReport:
    char: IntPoly
    rho: float
    dim_generalized: float
    dim_similarity: object
    cubic: IntPoly
    cubic_root: float
    irreducible: bool


def dimension_report(poly: TilePoly) -> DimensionReport:
    """Boundary dimension data for a validated parameter pair.

    ``dim_generalized`` always comes from the contact-matrix radius;
    ``dim_similarity`` is filled from the cubic only when the expansion
    is a similarity, and is ``None`` otherwise.
    """
    g = build_neighbor_graph(poly)
    m = contact_matrix(g)
    char = char_poly(m)
    rho = spectral_radius(m)
    logq = math.log(abs(poly.q))
    cubic = dimension_cubic(poly.p, poly.q)
    root = largest_real_root(cubic)
    dim_sim = 2 * math.log(root) / logq if poly.similarity else None
    return DimensionReport(
        char=char,
        rho=rho,
        dim_generalized=2 * math.log(rho) / logq,
        dim_similarity=dim_sim,
        cubic=cubic,
        cubic_root=root,
        irreducible=is_irreducible(m),
    )


def report_to_text(rep: DimensionReport, poly: TilePoly) -> str:
    """Readable dimension report, one ``key: value`` line each."""
    lines = [
        f"polynomial: x^2{poly.p:+d}x{poly.q:+d}",
        f"family: {poly.family.value}",
        f"similarity: {'yes' if poly.similarity else 'no'}",
        f"contact_char: {rep.char.coeffs}",
        f"rho: {rep.rho:.12g}",
        f"dim_generalized: {rep.dim_generalized:.12g}",
    ]
    if rep.dim_similarity is None:
        lines.append(
            f"dim_similarity: n/a (cubic root {rep.cubic_root:.12g}"
            " is conjectural)"
        )
    else:
        lines.append(f"dim_similarity: {rep.dim_similarity:.12g}")
    lines.append(f"cubic: {rep.cubic.coeffs}")
    lines.append(f"cubic_root: {rep.cubic_root:.12g}")
    lines.append(f"irreducible: {'yes' if rep.irreducible else 'no'}")
    return "\n".join(lines) + "\n"
