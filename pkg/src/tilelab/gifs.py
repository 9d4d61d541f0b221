"""Graph-directed system for the boundary pieces, and contact matrices.

An edge ell -[b]-> ell' of the neighbor graph says A*ell = ell' + b*v.
Splitting the tile equation along that edge produces one contracting map
per admissible shift j, and the shifts form the interval

    I_b = {b, ..., |q|-1}        for b >= 0,
    I_b = {0, ..., |q|-1 + b}    for b < 0,

of size |q| - |b|.  Counting maps per (source, target) pair gives the
contact matrix, whose spectral radius controls the boundary dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from tilelab.errors import DigitOutOfRange
from tilelab.neighbors import NeighborGraph, vertex_name


def index_set(b: int, q: int) -> tuple:
    """Admissible shifts for an edge labeled ``b`` at determinant ``q``."""
    absq = abs(q)
    if abs(b) > absq - 1:
        raise DigitOutOfRange(f"label {b} outside [-{absq - 1}, {absq - 1}]")
    if b >= 0:
        return tuple(range(b, absq))
    return tuple(range(0, absq + b))


@dataclass(frozen=True)
class GifsMap:
    """One contracting map x -> A^{-1}(x + shift*v) from dst into src."""

    src: int
    dst: int
    shift: int


@dataclass(frozen=True)
class GifsSystem:
    graph: NeighborGraph
    maps: tuple


def build_gifs(g: NeighborGraph) -> GifsSystem:
    """Expand every neighbor-graph edge into its family of shifted maps."""
    maps = []
    for e in g.edges:
        for j in index_set(e.label, g.poly.q):
            maps.append(GifsMap(e.src, e.dst, j))
    return GifsSystem(g, tuple(maps))


@dataclass(frozen=True)
class ContactMatrix:
    """Non-negative integer matrix indexed by the vertex order."""

    order: tuple
    entries: tuple


def contact_matrix(g: NeighborGraph) -> ContactMatrix:
    """Entry (i, j) counts the maps from vertex j into vertex i."""
    n = len(g.vertices)
    absq = abs(g.poly.q)
    rows = [[0] * n for _ in range(n)]
    for e in g.edges:
        rows[e.src][e.dst] += absq - abs(e.label)
    return ContactMatrix(g.vertices, tuple(tuple(r) for r in rows))


def _rows(m) -> tuple:
    entries = getattr(m, "entries", m)
    return tuple(tuple(int(x) for x in row) for row in entries)


def is_irreducible(m) -> bool:
    """Whether the digraph of non-zero entries is strongly connected."""
    rows = _rows(m)
    n = len(rows)
    if n == 1:
        return rows[0][0] != 0
    fwd = {i: [j for j in range(n) if rows[i][j]] for i in range(n)}
    bwd = {i: [j for j in range(n) if rows[j][i]] for i in range(n)}
    for adj in (fwd, bwd):
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != n:
            return False
    return True


def matrix_to_csv(m: ContactMatrix) -> str:
    """CSV dump with named vertices, deterministic."""
    names = [vertex_name(u) for u in m.order]
    lines = ["vertex," + ",".join(names)]
    for name, row in zip(names, m.entries):
        lines.append(name + "," + ",".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def gifs_to_text(gs: GifsSystem) -> str:
    """One line ``src dst shift`` per map, in construction order."""
    g = gs.graph
    lines = [
        f"{vertex_name(g.vertices[m.src])} {vertex_name(g.vertices[m.dst])} {m.shift}"
        for m in gs.maps
    ]
    return "\n".join(lines) + "\n"
