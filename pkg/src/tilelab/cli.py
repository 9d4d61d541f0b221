"""Command-line interface: analyze, export, render, and verify."""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys

from tilelab import verify as verify_suites
from tilelab.algebra import TilePoly, validate_poly
from tilelab.errors import ComputationError, InputError, IoError
from tilelab.geometry import (
    boundary_cloud,
    boundary_cloud_union,
    render,
    tile_cloud,
    tile_depth_limit,
)
from tilelab.gifs import build_gifs, contact_matrix, gifs_to_text, matrix_to_csv
from tilelab.neighbors import (
    build_neighbor_graph,
    graph_to_dot,
    graph_to_text,
    origin_on_boundary,
    vertex_name,
)
from tilelab.numbersys import is_number_system
from tilelab.spectral import dimension_report, report_to_text

_SCOPES = {
    "appendixA": ("neighbor-tables",),
    "appendixB": ("translation-tables",),
    "appendixC": ("contact-tables",),
    "theorem26": ("number-system",),
    "theorem39": ("factorizations",),
    "all": (
        "neighbor-tables",
        "translation-tables",
        "contact-tables",
        "number-system",
        "factorizations",
    ),
}

_AUTO_TILE_POINTS = 20000
_AUTO_BOUNDARY_DEPTH = 10


def _add_pq(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True,
                        help="linear coefficient of x^2+px+q")
    parser.add_argument("--q", type=int, required=True,
                        help="constant coefficient of x^2+px+q")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilelab",
        description="Boundary structure of planar self-affine lattice tiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", help="print the full report for one instance")
    _add_pq(analyze)
    analyze.add_argument("--depth", type=int, default=None,
                         help="cloud depth for figures (default: auto)")
    analyze.add_argument("--out", default=None,
                         help="directory for report.csv and PNG figures")

    graph = sub.add_parser("graph", help="export the neighbor graph")
    _add_pq(graph)
    graph.add_argument("--format", choices=("txt", "dot"), default="txt")
    graph.add_argument("--out", default=None, help="output file (default: stdout)")

    matrix = sub.add_parser("matrix", help="export the contact matrix")
    _add_pq(matrix)
    matrix.add_argument("--format", choices=("csv",), default="csv")
    matrix.add_argument("--out", default=None, help="output file (default: stdout)")

    gifs = sub.add_parser(
        "gifs", help="export the boundary maps, one per line")
    _add_pq(gifs)
    gifs.add_argument("--out", default=None, help="output file (default: stdout)")

    rend = sub.add_parser("render", help="raster the tile or its boundary")
    _add_pq(rend)
    rend.add_argument("--target", choices=("tile", "boundary"), required=True)
    rend.add_argument("--depth", type=int, default=None,
                      help="cloud depth (default: auto)")
    rend.add_argument("--width", type=int, default=512,
                      help="image width in pixels (64..4096)")
    rend.add_argument("--out", required=True,
                      help="output file; .ppm or .svg decides the format")

    ver = sub.add_parser("verify", help="replay the built-in reference tables")
    ver.add_argument("scope", choices=(
        "appendixA", "appendixB", "appendixC",
        "theorem26", "theorem39", "all",
    ))

    return parser


def _auto_tile_depth(poly: TilePoly) -> int:
    depth = math.ceil(math.log(_AUTO_TILE_POINTS) / math.log(abs(poly.q)))
    return min(max(depth, 1), tile_depth_limit())


def _write_text(text: str, out) -> None:
    if out is None:
        print(text, end="")
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {out}: {exc}") from exc


def _report_rows(poly, graph, rep, arithmetic, boundary0, depth):
    rows = [
        ("polynomial", f"x^2{poly.p:+d}x{poly.q:+d}"),
        ("family", poly.family.value),
        ("p", str(poly.p)),
        ("q", str(poly.q)),
        ("vertices", str(len(graph.vertices))),
        ("edges", str(len(graph.edges))),
        ("number_system", "yes" if arithmetic else "no"),
        ("origin_on_boundary", "yes" if boundary0 else "no"),
        ("similarity", "yes" if poly.similarity else "no"),
        ("rho", f"{rep.rho:.12g}"),
        ("dim_generalized", f"{rep.dim_generalized:.12g}"),
        ("dim_similarity",
         "" if rep.dim_similarity is None else f"{rep.dim_similarity:.12g}"),
        ("cubic", " ".join(str(c) for c in rep.cubic.coeffs)),
        ("cubic_root", f"{rep.cubic_root:.12g}"),
        ("irreducible", "yes" if rep.irreducible else "no"),
        ("depth", str(depth)),
    ]
    return rows


def _write_report_dir(out_dir, poly, graph, rep, arithmetic, boundary0, depth):
    from tilelab.figures import save_cloud_png, save_pieces_png

    try:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, "report.csv"), "w",
                  encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["key", "value"])
            writer.writerows(
                _report_rows(poly, graph, rep, arithmetic, boundary0, depth))
    except OSError as exc:
        raise IoError(f"cannot write report to {out_dir}: {exc}") from exc

    label = f"x^2{poly.p:+d}x{poly.q:+d}"
    gifs = build_gifs(graph)
    named = [
        (vertex_name(u), boundary_cloud(gifs, u, depth).points)
        for u in graph.vertices
    ]
    try:
        save_cloud_png(tile_cloud(poly, depth),
                       os.path.join(out_dir, "tile.png"),
                       title=f"tile for {label}")
        save_pieces_png(named, os.path.join(out_dir, "boundary.png"),
                        title=f"boundary pieces for {label}")
    except OSError as exc:
        raise IoError(f"cannot write figures to {out_dir}: {exc}") from exc


def _cmd_analyze(args) -> int:
    poly = validate_poly(args.p, args.q)
    graph = build_neighbor_graph(poly)
    rep = dimension_report(poly)
    arithmetic = is_number_system(poly)
    boundary0 = origin_on_boundary(graph)
    lines = [
        f"vertices: {len(graph.vertices)}",
        f"edges: {len(graph.edges)}",
        f"number system: {'yes' if arithmetic else 'no'}",
        f"origin on boundary: {'yes' if boundary0 else 'no'}",
    ]
    if poly.p == 0:
        lines.append("shape: square tile (p = 0)")
    print(report_to_text(rep, poly) + "\n".join(lines))
    if args.out is not None:
        depth = args.depth if args.depth is not None else _auto_tile_depth(poly)
        _write_report_dir(args.out, poly, graph, rep,
                          arithmetic, boundary0, depth)
    return 0


def _cmd_graph(args) -> int:
    graph = build_neighbor_graph(validate_poly(args.p, args.q))
    text = graph_to_dot(graph) if args.format == "dot" else graph_to_text(graph)
    _write_text(text, args.out)
    return 0


def _cmd_matrix(args) -> int:
    matrix = contact_matrix(build_neighbor_graph(validate_poly(args.p, args.q)))
    _write_text(matrix_to_csv(matrix), args.out)
    return 0


def _cmd_gifs(args) -> int:
    gifs = build_gifs(build_neighbor_graph(validate_poly(args.p, args.q)))
    _write_text(gifs_to_text(gifs), args.out)
    return 0


def _cmd_render(args) -> int:
    poly = validate_poly(args.p, args.q)
    suffix = os.path.splitext(str(args.out))[1].lower()
    fmt = {".ppm": "ppm", ".svg": "svg"}.get(suffix)
    if fmt is None:
        raise InputError("render output must end in .ppm or .svg")
    if args.target == "tile":
        depth = args.depth if args.depth is not None else _auto_tile_depth(poly)
        cloud = tile_cloud(poly, depth)
    else:
        depth = args.depth if args.depth is not None else _AUTO_BOUNDARY_DEPTH
        cloud = boundary_cloud_union(
            build_gifs(build_neighbor_graph(poly)), depth)
    render(cloud, args.out, fmt, width=args.width)
    return 0


def _cmd_verify(args) -> int:
    lines, failures = verify_suites.run_suites(_SCOPES[args.scope])
    for line in lines:
        print(line)
    if failures:
        print(f"{failures} of {len(lines)} checks did not pass")
        return 1
    print(f"all {len(lines)} checks passed")
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "graph": _cmd_graph,
    "matrix": _cmd_matrix,
    "gifs": _cmd_gifs,
    "render": _cmd_render,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ComputationError, IoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
