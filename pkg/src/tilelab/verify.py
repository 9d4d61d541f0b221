"""Self-check suites replaying the built-in reference tables.

Every suite is a generator of ``(case, ok)`` pairs over the standard
sample grid, so the command-line runner can print one line per case.
The suites compare independently stored tables against the search and
matrix code, which keeps either side honest about the other.
"""

from __future__ import annotations

from tilelab import numbersys
from tilelab.algebra import LatticeVec
from tilelab.gifs import build_gifs, contact_matrix
from tilelab.neighbors import build_neighbor_graph, origin_on_boundary
from tilelab.spectral import IntPoly, char_poly
from tilelab.tables import (
    reference_char_factors,
    reference_contact_matrix,
    reference_neighbor_graph,
    reference_translation_sets,
    standard_grid,
)


def _case(poly) -> str:
    return f"p={poly.p} q={poly.q}"


def check_neighbor_tables():
    """Searched neighbor graphs equal the stored vertex/edge tables."""
    for poly in standard_grid():
        built = build_neighbor_graph(poly)
        ref = reference_neighbor_graph(poly)
        built_edges = {
            (built.vertices[e.src], built.vertices[e.dst], e.label)
            for e in built.edges
        }
        ref_edges = {
            (ref.vertices[e.src], ref.vertices[e.dst], e.label)
            for e in ref.edges
        }
        ok = (set(built.vertices) == set(ref.vertices)
              and built_edges == ref_edges)
        yield _case(poly), ok


def check_translation_tables():
    """Derived map translations equal the stored translation sets."""
    for poly in standard_grid():
        graph = build_neighbor_graph(poly)
        gifs = build_gifs(graph)
        got: dict = {}
        for m in gifs.maps:
            key = (graph.vertices[m.src], graph.vertices[m.dst])
            got.setdefault(key, []).append(m.shift)
        built = {k: tuple(sorted(vs)) for k, vs in got.items()}
        yield _case(poly), built == reference_translation_sets(poly)


def check_contact_tables():
    """Contact matrices equal the stored entry tables."""
    for poly in standard_grid():
        built = contact_matrix(build_neighbor_graph(poly))
        ref = reference_contact_matrix(poly)
        ok = built.order == ref.order and built.entries == ref.entries
        yield _case(poly), ok


def check_number_system():
    """Radix property, boundary criterion, and termination all agree."""
    box = [LatticeVec(g, d) for g in range(-4, 5) for d in range(-4, 5)]
    for poly in standard_grid():
        arithmetic = numbersys.is_number_system(poly)
        graph = build_neighbor_graph(poly)
        ok = origin_on_boundary(graph) == (not arithmetic)
        if arithmetic:
            for ell in box:
                rep = numbersys.represent(poly, ell)
                if numbersys.eval_digits(poly, rep.digits) != ell:
                    ok = False
                    break
            ok = ok and all(
                numbersys.digit_expansion(poly, u) is not None
                for u in graph.vertices
            )
        else:
            ok = ok and any(
                numbersys.digit_expansion(poly, ell) is None for ell in box
            )
        yield _case(poly), ok


def check_factorizations():
    """Contact characteristic polynomials equal the quoted products."""
    for poly in standard_grid():
        factors = reference_char_factors(poly)
        if factors is None:
            continue
        got = char_poly(contact_matrix(build_neighbor_graph(poly)))
        want = IntPoly((1,))
        for f in factors:
            want = want * f
        yield _case(poly), got == want


SUITES = {
    "neighbor-tables": check_neighbor_tables,
    "translation-tables": check_translation_tables,
    "contact-tables": check_contact_tables,
    "number-system": check_number_system,
    "factorizations": check_factorizations,
}


def run_suites(names) -> tuple:
    """Run the named suites; return (lines, failure_count)."""
    lines = []
    failures = 0
    for name in names:
        for case, ok in SUITES[name]():
            lines.append(f"{name} {case}: {'ok' if ok else 'FAIL'}")
            if not ok:
                failures += 1
    return lines, failures
