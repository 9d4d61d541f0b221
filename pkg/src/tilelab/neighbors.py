"""Neighbor graph of a disk-like lattice tile and its sign paths.

The tile T solves A*T = union of T + a*v over digits a in {0..|q|-1}.
A lattice translate T + ell meets T exactly when ell admits an infinite
walk ell -> A*ell - b*v with labels |b| <= |q| - 1 that never leaves the
(finite) set of such vectors.  ``build_neighbor_graph`` finds that set by
pruning a candidate box and certifies it by doubling the box.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from tilelab.algebra import (
    Family,
    LatticeVec,
    PeriodicWord,
    RationalVec,
    TilePoly,
    eval_radix_periodic,
    neighbor_step,
)
from tilelab.errors import BoxExhausted, InvalidPath, UnknownVertex


@dataclass(frozen=True)
class Edge:
    """Directed edge src -[label]-> dst, endpoints as vertex indices."""

    src: int
    dst: int
    label: int


@dataclass(frozen=True)
class NeighborGraph:
    poly: TilePoly
    vertices: tuple
    edges: tuple

    def out_edges(self, i: int) -> tuple:
        return tuple(e for e in self.edges if e.src == i)

    def index(self, ell: LatticeVec) -> int:
        try:
            return self.vertices.index(ell)
        except ValueError:
            raise UnknownVertex(f"{ell} is not a vertex") from None


class Sign(Enum):
    """Sign constraint on every label of an infinite walk."""

    NON_NEGATIVE = "non-negative"
    NON_POSITIVE = "non-positive"


@dataclass(frozen=True)
class SignPath:
    """An eventually periodic walk whose labels all share one sign."""

    start: LatticeVec
    labels: PeriodicWord
    sign: Sign


def canonical_vertex_order(poly: TilePoly) -> tuple:
    """Preferred listing of the neighbor set, one convention per family."""
    P = abs(poly.p)
    V = LatticeVec
    fam = poly.family
    if fam is Family.PLUS_Q:
        half = [V(1, 0), V(0, 1), V(-1, 0), V(0, -1)]
        rest = [V(-1, 1), V(-1, -1), V(1, -1), V(1, 1)]
        return tuple(half + rest)
    if fam is Family.MINUS_Q:
        half = [V(1, 0), V(0, 1), V(-1, 0), V(0, -1)]
        rest = [V(-1, 1), V(1, -1), V(1, 1), V(-1, -1)]
        return tuple(half + rest)
    if fam is Family.PLUS_X:
        plus = [V(1, 0), V(0, 1), V(1, 1)]
    elif fam is Family.MINUS_X:
        plus = [V(1, 0), V(0, 1), V(-1, 1)]
    elif fam in (Family.PLUS_PX, Family.PLUS_2X):
        plus = [V(1, 0), V(P - 1, 1), V(P, 1)]
    elif fam in (Family.MINUS_PX, Family.MINUS_2X):
        plus = [V(1, 0), V(-(P - 1), 1), V(-P, 1)]
    elif fam is Family.PLUS_PX_MINUS_Q:
        plus = [V(1, 0), V(P, 1), V(P + 1, 1)]
    else:  # MINUS_PX_MINUS_Q
        plus = [V(1, 0), V(-P, 1), V(-(P + 1), 1)]
    return tuple(plus + [-u for u in plus])


def _surviving_set(poly: TilePoly, half_width: int, half_height: int) -> frozenset:
    """Vectors in the box that start an infinite in-box walk."""
    q = abs(poly.q)
    cand = {
        LatticeVec(g, d)
        for g in range(-half_width, half_width + 1)
        for d in range(-half_height, half_height + 1)
    }
    cand.discard(LatticeVec(0, 0))
    out = {}
    preds = {ell: [] for ell in cand}
    for ell in cand:
        targets = []
        for b in range(-(q - 1), q):
            t = neighbor_step(poly, ell, b)
            if t in cand:
                targets.append(t)
                preds[t].append(ell)
        out[ell] = len(targets)
    dead = [ell for ell, n in out.items() if n == 0]
    alive = set(cand)
    while dead:
        ell = dead.pop()
        if ell not in alive:
            continue
        alive.discard(ell)
        for s in preds[ell]:
            if s in alive:
                out[s] -= 1
                if out[s] == 0:
                    dead.append(s)
    return frozenset(alive)


def build_neighbor_graph(poly: TilePoly, _box=None, _retries: int = 2) -> NeighborGraph:
    """Compute the neighbor graph by box search with stabilization.

    The candidate box starts at |gamma| <= |p| + |q| + 2, |delta| <= 3
    (override with ``_box``).  A pruned vertex set is accepted only when
    doubling the box reproduces it; otherwise the box doubles and the
    search retries, raising ``BoxExhausted`` after ``_retries`` failures.
    """
    a, b = _box if _box is not None else (abs(poly.p) + abs(poly.q) + 2, 3)
    for _ in range(_retries + 1):
        s1 = _surviving_set(poly, a, b)
        s2 = _surviving_set(poly, 2 * a, 2 * b)
        if s1 and s1 == s2:
            return _graph_from_vertex_set(poly, s1)
        a, b = 2 * a, 2 * b
    raise BoxExhausted(
        f"neighbor search for x^2{poly.p:+d}x{poly.q:+d} did not stabilize"
    )


def _graph_from_vertex_set(poly: TilePoly, vertex_set) -> NeighborGraph:
    order = [u for u in canonical_vertex_order(poly) if u in vertex_set]
    extras = sorted(
        (u for u in vertex_set if u not in set(order)),
        key=lambda u: (u.delta, u.gamma),
    )
    vertices = tuple(order + extras)
    index = {u: i for i, u in enumerate(vertices)}
    q = abs(poly.q)
    edges = []
    for i, u in enumerate(vertices):
        for lab in range(-(q - 1), q):
            t = neighbor_step(poly, u, lab)
            if t in index:
                edges.append(Edge(i, index[t], lab))
    edges.sort(key=lambda e: (e.src, e.label))
    return NeighborGraph(poly, vertices, tuple(edges))


def _sign_survivors(g: NeighborGraph, sign: Sign):
    """Adjacency of the sign-restricted subgraph, pruned to vertices
    that still start an infinite walk inside it."""
    keep = (lambda b: b >= 0) if sign is Sign.NON_NEGATIVE else (lambda b: b <= 0)
    adj = {i: [] for i in range(len(g.vertices))}
    for e in g.edges:
        if keep(e.label):
            adj[e.src].append((e.label, e.dst))
    alive = set(adj)
    changed = True
    while changed:
        changed = False
        for i in list(alive):
            if not any(j in alive for _, j in adj[i]):
                alive.discard(i)
                changed = True
    return {i: sorted(t for t in adj[i] if t[1] in alive) for i in alive}


def find_sign_path(g: NeighborGraph, sign: Sign):
    """Shortest purely periodic walk with all labels of one sign.

    Starts are tried in canonical vertex order; among shortest cycles at
    the chosen start the lexicographically smallest label word wins.
    Returns ``None`` when the sign-restricted subgraph admits no cycle.
    """
    adj = _sign_survivors(g, sign)
    if not adj:
        return None
    for start in range(len(g.vertices)):
        if start not in adj:
            continue
        word = _shortest_cycle_word(adj, start)
        if word is not None:
            return SignPath(g.vertices[start], PeriodicWord(period=word), sign)
    return None


def _shortest_cycle_word(adj, start):
    for length in range(1, len(adj) + 1):
        word = _cycle_dfs(adj, start, start, length, ())
        if word is not None:
            return word
    return None


def _cycle_dfs(adj, start, cur, remaining, word):
    if remaining == 0:
        return word if cur == start else None
    for lab, dst in adj.get(cur, ()):
        found = _cycle_dfs(adj, start, dst, remaining - 1, word + (lab,))
        if found is not None:
            return found
    return None


def origin_on_boundary(g: NeighborGraph) -> bool:
    """True when 0 lies on the boundary of the tile.

    Equivalent to the existence of an all-non-positive sign path: such a
    walk from ell certifies 0 in T intersect (T + ell).
    """
    return bool(_sign_survivors(g, Sign.NON_POSITIVE))


def _label_map(g: NeighborGraph):
    return {(e.src, e.label): e.dst for e in g.edges}


def accepts(g: NeighborGraph, start: LatticeVec, word) -> bool:
    """Whether the label word traces a walk in the graph from ``start``."""
    cur = g.index(start)
    step = _label_map(g)
    for lab in word:
        nxt = step.get((cur, lab))
        if nxt is None:
            return False
        cur = nxt
    return True


def boundary_point_from_path(g: NeighborGraph, sp: SignPath) -> RationalVec:
    """Exact common point of T and T + start certified by a sign path.

    The walk is validated first: every label must follow an edge and the
    periodic part must return to its anchor vertex.  The point is the
    radix value of the positive parts max(b, 0) of the labels.
    """
    cur = g.index(sp.start)
    step = _label_map(g)
    for lab in sp.labels.preperiod:
        cur = step.get((cur, lab))
        if cur is None:
            raise InvalidPath(f"no edge labeled {lab} on the preperiod walk")
    anchor = cur
    for lab in sp.labels.period:
        cur = step.get((cur, lab))
        if cur is None:
            raise InvalidPath(f"no edge labeled {lab} on the period walk")
    if cur != anchor:
        raise InvalidPath("period labels do not close a cycle")
    positive = PeriodicWord(
        preperiod=[max(b, 0) for b in sp.labels.preperiod],
        period=[max(b, 0) for b in sp.labels.period],
    )
    return eval_radix_periodic(g.poly, positive)


def vertex_name(u: LatticeVec) -> str:
    """Readable name like ``v``, ``-Av``, ``Av+2v`` for a lattice vector."""
    g, d = u.gamma, u.delta
    if d == 0:
        if g == 1:
            return "v"
        if g == -1:
            return "-v"
        return f"{g}v"
    if d == 1:
        base = "Av"
    elif d == -1:
        base = "-Av"
    else:
        base = f"{d}Av"
    if g == 0:
        return base
    if g == 1:
        return base + "+v"
    if g == -1:
        return base + "-v"
    return base + (f"+{g}v" if g > 0 else f"{g}v")


def graph_to_text(g: NeighborGraph) -> str:
    """Plain-text dump: header, vertex table, edge table.

    Header is ``p q family n``; vertex lines are ``index gamma delta``;
    edge lines are ``src dst label``.  The output is deterministic.
    """
    poly = g.poly
    lines = [f"{poly.p} {poly.q} {poly.family.value} {len(g.vertices)}"]
    for i, u in enumerate(g.vertices):
        lines.append(f"{i} {u.gamma} {u.delta}")
    for e in g.edges:
        lines.append(f"{e.src} {e.dst} {e.label}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: NeighborGraph) -> str:
    """Graphviz rendering with human-readable vertex names."""
    lines = ["digraph neighbors {", "  rankdir=LR;"]
    for u in g.vertices:
        lines.append(f'  "{vertex_name(u)}";')
    for e in g.edges:
        src = vertex_name(g.vertices[e.src])
        dst = vertex_name(g.vertices[e.dst])
        lines.append(f'  "{src}" -> "{dst}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
