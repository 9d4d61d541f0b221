"""Point-cloud geometry: tile and boundary approximations, distances, rendering.

All clouds live in the lattice frame: the point (x, y) stands for
x*v + y*A(v), matching the integer pairs used by :class:`LatticeVec`.
The tile is approximated by depth-``k`` digit expansions (|q|**k points)
and each boundary piece by iterating the graph-directed maps of the
associated system, so the two approximations can be played against each
other in the numeric open-set-condition check.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from tilelab.algebra import LatticeVec, TilePoly
from tilelab.errors import (
    DepthTooLarge,
    EmptyCloud,
    InputError,
    IoError,
    WidthOutOfRange,
)
from tilelab.gifs import GifsSystem, build_gifs
from tilelab.neighbors import build_neighbor_graph

_TILE_DEPTH_DEFAULT_MAX = 14
_BOUNDARY_DEPTH_MAX = 20
_OSC_DEPTH_MAX = 12
_OSC_MIN_POINTS = 256
_KEY_STRIDE = np.int64(1) << np.int64(21)
_ROUND_DECIMALS = 12


@dataclass(frozen=True, eq=False)
class PointCloud:
    """A finite planar point set tagged with the depth that produced it."""

    points: np.ndarray
    depth: int

    def to_text(self) -> str:
        """One ``x y`` pair per line, in ``%.12g`` formatting."""
        lines = [f"{x:.12g} {y:.12g}" for x, y in self.points]
        return "\n".join(lines) + ("\n" if lines else "")


def tile_depth_limit() -> int:
    """Deepest allowed tile cloud; TILELAB_DEPTH_MAX overrides the default."""
    return int(os.environ.get("TILELAB_DEPTH_MAX", _TILE_DEPTH_DEFAULT_MAX))


def _apply_inverse_points(poly: TilePoly, pts: np.ndarray) -> np.ndarray:
    g, d = pts[:, 0], pts[:, 1]
    return np.column_stack(((poly.q * d - poly.p * g) / poly.q, -g / poly.q))


def tile_cloud(poly: TilePoly, depth: int) -> PointCloud:
    """All |q|**depth points with digit words of length ``depth``.

    Iterates S -> A^{-1}(S + D*v) starting from the origin.  A word with
    leading zero digits reproduces the shorter word's point bit for bit,
    so deeper clouds nest over shallower ones.
    """
    limit = tile_depth_limit()
    if depth < 1 or depth > limit:
        raise DepthTooLarge(
            f"tile depth must be between 1 and {limit}, got {depth}"
        )
    big_q = abs(poly.q)
    offsets = np.zeros((big_q, 2))
    offsets[:, 0] = np.arange(big_q)
    pts = np.zeros((1, 2))
    for _ in range(depth):
        pts = (pts[:, None, :] + offsets[None, :, :]).reshape(-1, 2)
        pts = _apply_inverse_points(poly, pts)
    return PointCloud(pts, depth)


def _maps_by_source(gifs: GifsSystem) -> dict:
    per_src: dict = {i: [] for i in range(len(gifs.graph.vertices))}
    for m in gifs.maps:
        per_src[m.src].append((m.dst, m.shift))
    return per_src


def _boundary_clouds(gifs: GifsSystem, depth: int) -> dict:
    """Depth-``depth`` cloud for every boundary piece at once.

    The pieces satisfy a joint recurrence, so they are refined in
    lockstep; duplicates are merged after rounding to 12 decimals.
    """
    poly = gifs.graph.poly
    per_src = _maps_by_source(gifs)
    clouds = {i: np.zeros((1, 2)) for i in per_src}
    for _ in range(depth):
        refined = {}
        for i, targets in per_src.items():
            parts = [clouds[j] + np.array([shift, 0.0]) for j, shift in targets]
            pts = _apply_inverse_points(poly, np.vstack(parts))
            refined[i] = np.unique(np.round(pts, _ROUND_DECIMALS), axis=0)
        clouds = refined
    return clouds


def boundary_cloud(gifs: GifsSystem, vertex: LatticeVec, depth: int) -> PointCloud:
    """Approximate the boundary piece for one neighbor ``vertex``."""
    idx = gifs.graph.index(vertex)
    if depth < 0 or depth > _BOUNDARY_DEPTH_MAX:
        raise DepthTooLarge(
            f"boundary depth must be between 0 and {_BOUNDARY_DEPTH_MAX},"
            f" got {depth}"
        )
    return PointCloud(_boundary_clouds(gifs, depth)[idx], depth)


def boundary_cloud_union(gifs: GifsSystem, depth: int) -> PointCloud:
    """All boundary pieces merged: an approximation of the full boundary."""
    if depth < 0 or depth > _BOUNDARY_DEPTH_MAX:
        raise DepthTooLarge(
            f"boundary depth must be between 0 and {_BOUNDARY_DEPTH_MAX},"
            f" got {depth}"
        )
    clouds = _boundary_clouds(gifs, depth)
    merged = np.vstack([clouds[i] for i in sorted(clouds)])
    return PointCloud(np.unique(merged, axis=0), depth)


def hausdorff_distance(a: PointCloud, b: PointCloud) -> float:
    """Symmetric Hausdorff distance between two point clouds."""
    pa = np.asarray(a.points, dtype=float)
    pb = np.asarray(b.points, dtype=float)
    if len(pa) == 0 or len(pb) == 0:
        raise EmptyCloud("hausdorff distance needs two non-empty clouds")
    forward = cKDTree(pb).query(pa)[0].max()
    backward = cKDTree(pa).query(pb)[0].max()
    return float(max(forward, backward))


# --- numeric open-set-condition check -------------------------------------

@dataclass(frozen=True)
class OscItem:
    """Result of the two occupancy tests for a single neighbor."""

    vertex: LatticeVec
    containment_ok: bool
    disjoint_ok: bool
    overlap_cells: int


@dataclass(frozen=True)
class OscReport:
    status: str  # "pass", "fail", or "inconclusive"
    depth: int
    items: tuple


def _min_expansion(poly: TilePoly) -> float:
    """Smallest modulus among the eigenvalues of the expanding matrix.

    Clouds converge at this rate per refinement step, so it sets the
    finest occupancy grid the depth can honestly support.  It equals
    sqrt(|q|) whenever the matrix is a similarity.
    """
    disc = poly.p * poly.p - 4 * poly.q
    if disc < 0:
        return math.sqrt(poly.q)
    largest = (abs(poly.p) + math.sqrt(disc)) / 2.0
    return abs(poly.q) / largest


def _bin_keys(pts: np.ndarray, origin: np.ndarray, cell: float) -> np.ndarray:
    ij = np.floor((pts - origin) / cell).astype(np.int64)
    return np.unique(ij[:, 0] * _KEY_STRIDE + ij[:, 1])


def _erode(keys: np.ndarray, radius: int) -> np.ndarray:
    """Cells whose full (2*radius+1)^2 neighborhood is occupied."""
    out = keys
    for dx in range(-radius, radius + 1):
        for dy in range(-radius, radius + 1):
            if dx == 0 and dy == 0:
                continue
            shift = np.int64(dx) * _KEY_STRIDE + np.int64(dy)
            out = np.intersect1d(out, keys - shift, assume_unique=True)
    return out


def _within_dilated(keys: np.ndarray, base: np.ndarray, radius: int) -> bool:
    """True when every key lies within ``radius`` cells of ``base``."""
    if len(keys) == 0:
        return True
    hit = np.zeros(len(keys), dtype=bool)
    for dx in range(-radius, radius + 1):
        for dy in range(-radius, radius + 1):
            shift = np.int64(dx) * _KEY_STRIDE + np.int64(dy)
            hit |= np.isin(keys - shift, base, assume_unique=True)
            if hit.all():
                return True
    return bool(hit.all())


def check_osc_numeric(poly: TilePoly, depth: int = 8) -> OscReport:
    """Occupancy-grid test that the lattice translates cannot overlap.

    For each neighbor ``u`` the interiors of the tile and of its
    translate by ``u`` are proxied by eroding the occupancy cells of the
    depth-``depth`` clouds; the two eroded sets must be essentially
    disjoint.  As a cross-check of the combinatorics, the boundary piece
    generated for ``u`` must land inside a thin dilation of both clouds.
    """
    if depth < 1 or depth > _OSC_DEPTH_MAX:
        raise DepthTooLarge(
            f"osc depth must be between 1 and {_OSC_DEPTH_MAX}, got {depth}"
        )
    graph = build_neighbor_graph(poly)
    if abs(poly.q) ** depth < _OSC_MIN_POINTS:
        return OscReport("inconclusive", depth, ())

    gifs = build_gifs(graph)
    base = tile_cloud(poly, depth).points
    pieces = _boundary_clouds(gifs, depth)

    span = float(max(np.ptp(base[:, 0]), np.ptp(base[:, 1])))
    cells = max(2, int(round(_min_expansion(poly) ** depth / 2)))
    cell = span / cells
    origin = base.min(axis=0)

    base_keys = _bin_keys(base, origin, cell)
    base_eroded = _erode(base_keys, 2)

    items = []
    for i, u in enumerate(graph.vertices):
        offset = np.array([float(u.gamma), float(u.delta)])
        shifted_keys = _bin_keys(base + offset, origin, cell)
        shifted_eroded = _erode(shifted_keys, 2)
        overlap = len(np.intersect1d(base_eroded, shifted_eroded,
                                     assume_unique=True))
        budget = max(4, round(0.01 * min(len(base_eroded),
                                         len(shifted_eroded))))
        piece_keys = _bin_keys(pieces[i], origin, cell)
        containment = (_within_dilated(piece_keys, base_keys, 2)
                       and _within_dilated(piece_keys, shifted_keys, 2))
        items.append(OscItem(u, containment, overlap <= budget, overlap))

    ok = all(it.containment_ok and it.disjoint_ok for it in items)
    return OscReport("pass" if ok else "fail", depth, tuple(items))


# --- rendering -------------------------------------------------------------

_WIDTH_MIN = 64
_WIDTH_MAX = 4096
_BACKGROUND = (255, 255, 255)
_FOREGROUND = (31, 58, 95)


def _rasterize(cloud: PointCloud, width: int) -> np.ndarray:
    pts = np.asarray(cloud.points, dtype=float)
    if len(pts) == 0:
        return np.zeros((width, width), dtype=bool)
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    xspan = max(xmax - xmin, 1e-12)
    yspan = max(ymax - ymin, 1e-12)
    height = min(max(int(round(width * yspan / xspan)), 1), _WIDTH_MAX)
    ix = np.clip(((pts[:, 0] - xmin) / xspan * (width - 1)).round()
                 .astype(int), 0, width - 1)
    iy = np.clip(((pts[:, 1] - ymin) / yspan * (height - 1)).round()
                 .astype(int), 0, height - 1)
    grid = np.zeros((height, width), dtype=bool)
    grid[(height - 1) - iy, ix] = True
    return grid


def _ppm_bytes(grid: np.ndarray) -> bytes:
    height, width = grid.shape
    img = np.empty((height, width, 3), dtype=np.uint8)
    img[:] = _BACKGROUND
    img[grid] = _FOREGROUND
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return header + img.tobytes()


def _svg_text(grid: np.ndarray) -> str:
    height, width = grid.shape
    fg = "#%02x%02x%02x" % _FOREGROUND
    bg = "#%02x%02x%02x" % _BACKGROUND
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}"'
        f' height="{height}" viewBox="0 0 {width} {height}">\n',
        f'<rect width="{width}" height="{height}" fill="{bg}"/>\n',
    ]
    for row, col in np.argwhere(grid):
        parts.append(
            f'<rect x="{col}" y="{row}" width="1" height="1" fill="{fg}"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def render(cloud: PointCloud, path, fmt: str, width: int = 512) -> None:
    """Write a raster of the cloud as a binary PPM or an SVG file.

    The output is a pure function of the cloud and the width, so repeat
    renders are byte-identical.
    """
    if width < _WIDTH_MIN or width > _WIDTH_MAX:
        raise WidthOutOfRange(
            f"width must be between {_WIDTH_MIN} and {_WIDTH_MAX},"
            f" got {width}"
        )
    if fmt not in ("ppm", "svg"):
        raise InputError(f"unknown render format {fmt!r}")
    grid = _rasterize(cloud, width)
    try:
        if fmt == "ppm":
            with open(path, "wb") as fh:
                fh.write(_ppm_bytes(grid))
        else:
            with open(path, "w", encoding="ascii") as fh:
                fh.write(_svg_text(grid))
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
