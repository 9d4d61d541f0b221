"""Exception hierarchy for tilelab.

Three branches matter for the command line tool: ``InputError`` covers
everything a caller can fix by changing arguments (exit code 2),
``ComputationError`` covers internal search or iteration failures
(exit code 1), and ``IoError`` covers filesystem trouble (exit code 1).
"""

from __future__ import annotations


class TileLabError(Exception):
    """Base class for all tilelab errors."""


class InputError(TileLabError):
    """Raised when arguments or data supplied by the caller are invalid."""


class NotExpanding(InputError):
    """The companion matrix of x^2 + p*x + q is not expanding."""


class NotDiskLike(InputError):
    """The parameters violate 2*|p| <= |q + 2|, so the tile is not a disk."""


class DegenerateDeterminant(InputError):
    """|q| <= 1 leaves no room for a two-digit-or-more radix system."""


class DigitOutOfRange(InputError):
    """A digit or edge label lies outside the admissible range."""


class UnknownVertex(InputError):
    """A lattice vector is not a vertex of the graph in question."""


class NotANeighbor(InputError):
    """A lattice vector is not a neighbor of the central tile."""


class NotANumberSystem(InputError):
    """(A, D) is not a lattice number system, so the request is void."""


class DepthTooLarge(InputError):
    """An iteration depth is outside the supported range."""


class EmptyCloud(InputError):
    """A point cloud that must be non-empty is empty."""


class WidthOutOfRange(InputError):
    """A raster width is outside the supported range."""


class NegativeEntry(InputError):
    """A matrix that must be non-negative has a negative entry."""


class InvalidPath(InputError):
    """A requested walk does not describe a path in the graph."""


class ComputationError(TileLabError):
    """Raised when an internal computation fails to converge or verify."""


class BoxExhausted(ComputationError):
    """The candidate box for the vertex search did not stabilize."""


class NonTermination(ComputationError):
    """An iteration exceeded its safety cap without terminating."""


class SingularPeriod(ComputationError):
    """A periodic radix value leads to a singular linear system."""


class IoError(TileLabError):
    """Raised when reading or writing a file fails."""
