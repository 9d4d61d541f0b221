"""Boundary structure of planar self-affine lattice tiles.

The package studies the integral matrices with characteristic polynomial
x^2 + px + q whose tile is homeomorphic to a disk: the neighbor graph of
the induced lattice tiling, the graph-directed system satisfied by the
boundary pieces, contact matrices and boundary dimensions, the radix
property of the digit system, and numeric cross-checks on point clouds.
"""

from __future__ import annotations

from tilelab.algebra import (
    Family,
    LatticeVec,
    PeriodicWord,
    RationalVec,
    TilePoly,
    validate_poly,
)
from tilelab.geometry import (
    PointCloud,
    boundary_cloud,
    boundary_cloud_union,
    check_osc_numeric,
    hausdorff_distance,
    render,
    tile_cloud,
)
from tilelab.gifs import build_gifs, contact_matrix, is_irreducible
from tilelab.neighbors import (
    Sign,
    SignPath,
    build_neighbor_graph,
    find_sign_path,
    origin_on_boundary,
)
from tilelab.numbersys import (
    digit_expansion,
    eval_digits,
    is_number_system,
    neighbor_delta_form,
    neighbor_digit_form,
    represent,
)
from tilelab.spectral import (
    IntPoly,
    char_poly,
    cubic_largest_root,
    dimension_report,
    spectral_radius,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "IntPoly",
    "LatticeVec",
    "PeriodicWord",
    "PointCloud",
    "RationalVec",
    "Sign",
    "SignPath",
    "TilePoly",
    "boundary_cloud",
    "boundary_cloud_union",
    "build_gifs",
    "build_neighbor_graph",
    "char_poly",
    "check_osc_numeric",
    "contact_matrix",
    "cubic_largest_root",
    "digit_expansion",
    "dimension_report",
    "eval_digits",
    "find_sign_path",
    "hausdorff_distance",
    "is_irreducible",
    "is_number_system",
    "neighbor_delta_form",
    "neighbor_digit_form",
    "origin_on_boundary",
    "render",
    "represent",
    "spectral_radius",
    "tile_cloud",
    "validate_poly",
    "__version__",
]
