"""Tile identities, torus edge lattices, and stateless edge coloring.

Coordinate convention (used everywhere in this package): x grows rightward,
y grows downward.  ``H[y, x]`` is the color of the horizontal edge on the
north side of tile (x, y); ``V[y, x]`` is the color of the vertical edge on
the west side of tile (x, y).  Shared edges are stored once, so any lattice
read is edge-consistent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .errors import ValidationError

EdgeKind = Literal["h", "v"]

_M64 = (1 << 64) - 1


@dataclass(frozen=True, order=True)
class WangTileId:
    """Wang tile: four edge colors (north, east, south, west)."""

    n: int
    e: int
    s: int
    w: int

    def index(self, colors: int) -> int:
        """Canonical index in [0, C^4): (n, e, s, w) big-endian in C."""
        for c in (self.n, self.e, self.s, self.w):
            if not 0 <= c < colors:
                raise ValidationError(f"edge color {c} out of range for C={colors}")
        return ((self.n * colors + self.e) * colors + self.s) * colors + self.w

    @classmethod
    def from_index(cls, index: int, colors: int) -> "WangTileId":
        if not 0 <= index < colors**4:
            raise ValidationError(f"tile index {index} out of range for C={colors}")
        w = index % colors
        s = (index // colors) % colors
        e = (index // colors**2) % colors
        n = index // colors**3
        return cls(n, e, s, w)

    def __iter__(self) -> Iterator[int]:
        return iter((self.n, self.e, self.s, self.w))


# An interior tile of the dual scheme is identified by the edge colors of
# the Wang tile that encloses it, so it shares the Wang id structure.
InteriorTileId = WangTileId


@dataclass(frozen=True, order=True)
class CornerTileId:
    """Corner Wang tile: four corner colors (nw, ne, se, sw)."""

    nw: int
    ne: int
    se: int
    sw: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.nw, self.ne, self.se, self.sw))


@dataclass(frozen=True, order=True)
class CrossTileId:
    """Cross tile: the four edge colors incident at a lattice corner.

    cn/cs are the vertical edges above/below the corner, ce/cw the
    horizontal edges to its right/left.
    """

    cn: int
    ce: int
    cs: int
    cw: int

    def index(self, colors: int) -> int:
        for c in (self.cn, self.ce, self.cs, self.cw):
            if not 0 <= c < colors:
                raise ValidationError(f"edge color {c} out of range for C={colors}")
        return ((self.cn * colors + self.ce) * colors + self.cs) * colors + self.cw

    @classmethod
    def from_index(cls, index: int, colors: int) -> "CrossTileId":
        if not 0 <= index < colors**4:
            raise ValidationError(f"tile index {index} out of range for C={colors}")
        cw = index % colors
        cs = (index // colors) % colors
        ce = (index // colors**2) % colors
        cn = index // colors**3
        return cls(cn, ce, cs, cw)

    def __iter__(self) -> Iterator[int]:
        return iter((self.cn, self.ce, self.cs, self.cw))


@dataclass(frozen=True, eq=False)
class EdgeLattice:
    """Assignment of colors to the edges of a width x height tile grid.

    Periodic lattices store H and V as (height, width) arrays and wrap.
    Non-periodic lattices need the trailing boundary edges too, so H is
    (height+1, width) and V is (height, width+1).  Immutable after
    construction; the arrays are marked read-only.
    """

    colors: int
    H: np.ndarray  # north edge of tile (x, y) at [y, x]
    V: np.ndarray  # west edge of tile (x, y) at [y, x]
    periodic: bool = True

    def __post_init__(self) -> None:
        if self.colors < 1:
            raise ValidationError("colors must be >= 1")
        H = np.ascontiguousarray(self.H, dtype=np.int16)
        V = np.ascontiguousarray(self.V, dtype=np.int16)
        if H.ndim != 2 or V.ndim != 2:
            raise ValidationError("H and V must be 2-D arrays")
        extra = 0 if self.periodic else 1
        height, width = V.shape[0], H.shape[1]
        if H.shape != (height + extra, width) or V.shape != (height, width + extra):
            raise ValidationError(
                f"inconsistent edge array shapes H{H.shape} V{V.shape} for periodic={self.periodic}"
            )
        for arr in (H, V):
            if arr.size and (arr.min() < 0 or arr.max() >= self.colors):
                raise ValidationError("edge color out of range")
        H.flags.writeable = False
        V.flags.writeable = False
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "V", V)

    @property
    def width(self) -> int:
        return self.H.shape[1]

    @property
    def height(self) -> int:
        return self.V.shape[0]

    def h_at(self, x: int, y: int) -> int:
        if self.periodic:
            return int(self.H[y % self.height, x % self.width])
        if not (0 <= x < self.width and 0 <= y <= self.height):
            raise ValidationError(f"horizontal edge ({x}, {y}) outside non-periodic lattice")
        return int(self.H[y, x])

    def v_at(self, x: int, y: int) -> int:
        if self.periodic:
            return int(self.V[y % self.height, x % self.width])
        if not (0 <= x <= self.width and 0 <= y < self.height):
            raise ValidationError(f"vertical edge ({x}, {y}) outside non-periodic lattice")
        return int(self.V[y, x])

    def tile_of(self, x: int, y: int) -> WangTileId:
        """Wang tile read at (x, y): (H(x,y), V(x+1,y), H(x,y+1), V(x,y))."""
        if not self.periodic and not (0 <= x < self.width and 0 <= y < self.height):
            raise ValidationError(f"tile ({x}, {y}) outside non-periodic lattice")
        return WangTileId(
            self.h_at(x, y),
            self.v_at(x + 1, y),
            self.h_at(x, y + 1),
            self.v_at(x, y),
        )

    def cross_of(self, x: int, y: int) -> CrossTileId:
        """Cross tile at the lattice corner on the NW corner of tile (x, y)."""
        return CrossTileId(
            self.v_at(x, y - 1),
            self.h_at(x, y),
            self.v_at(x, y),
            self.h_at(x - 1, y),
        )

    def tile_indices(self) -> np.ndarray:
        """Canonical index of every tile, vectorized, shape (height, width)."""
        if not self.periodic:
            raise ValidationError("tile_indices is implemented for periodic lattices")
        c = self.colors
        n = self.H.astype(np.int64)
        e = np.roll(self.V, -1, axis=1).astype(np.int64)
        s = np.roll(self.H, -1, axis=0).astype(np.int64)
        w = self.V.astype(np.int64)
        return ((n * c + e) * c + s) * c + w

    def cross_indices(self) -> np.ndarray:
        """Canonical index of the cross at every lattice corner (x, y)."""
        if not self.periodic:
            raise ValidationError("cross_indices is implemented for periodic lattices")
        c = self.colors
        cn = np.roll(self.V, 1, axis=0).astype(np.int64)
        ce = self.H.astype(np.int64)
        cs = self.V.astype(np.int64)
        cw = np.roll(self.H, 1, axis=1).astype(np.int64)
        return ((cn * c + ce) * c + cs) * c + cw


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    missing: tuple[WangTileId, ...]
    duplicated: tuple[tuple[WangTileId, int], ...]


def complement(lattice: EdgeLattice) -> EdgeLattice:
    """Lattice whose tile at (x, y) is the cross of `lattice` at (x, y).

    Every edge is replaced by the perpendicular edge through its center:
    H'(x, y) = V(x, y-1) and V'(x, y) = H(x-1, y).  Applying it twice
    yields a diagonally shifted copy, so only tile multisets are preserved
    pointwise, not positions.
    """
    if not lattice.periodic:
        raise ValidationError("complement requires a periodic lattice")
    H2 = np.roll(lattice.V, 1, axis=0)
    V2 = np.roll(lattice.H, 1, axis=1)
    return EdgeLattice(lattice.colors, H2, V2, periodic=True)


def check_complete(lattice: EdgeLattice) -> CompletenessReport:
    """Check that every one of the C^4 Wang tiles occurs exactly once."""
    if not lattice.periodic:
        raise ValidationError("completeness is defined on periodic lattices")
    c = lattice.colors
    total = c**4
    if lattice.width * lattice.height != total:
        raise ValidationError(
            f"lattice is {lattice.width}x{lattice.height}; completeness needs width*height == C^4 = {total}"
        )
    counts = np.bincount(lattice.tile_indices().ravel(), minlength=total)
    missing = tuple(WangTileId.from_index(int(i), c) for i in np.flatnonzero(counts == 0))
    duplicated = tuple(
        (WangTileId.from_index(int(i), c), int(counts[i])) for i in np.flatnonzero(counts > 1)
    )
    return CompletenessReport(not missing and not duplicated, missing, duplicated)


def _mix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return (z ^ (z >> 31)) & _M64

def stable_mix(*words: int) -> int:
    """Deterministic 64-bit hash of a word sequence (splitmix64 chain)."""
    h = 0x8BADF00D5EEDC0DE
    for w in words:
        h = _mix64((h ^ (w & _M64)) & _M64)
    return h


def hash_edge_coloring(seed: int, kind: EdgeKind, x: int, y: int, colors: int) -> int:
    """Stateless color of one lattice edge of an infinite seeded tiling.

    Pure function of its arguments, so any window of the plane can be
    evaluated independently and in any order.  Reduction modulo C uses
    rejection sampling to avoid modulo bias.
    """
    if colors < 1:
        raise ValidationError("colors must be >= 1")
    if colors == 1:
        return 0
    k = 0 if kind == "h" else 1
    limit = _M64 + 1 - ((_M64 + 1) % colors)
    ctr = 0
    d = stable_mix(seed, k, x & _M64, y & _M64)
    while d >= limit:
        ctr += 1
        d = stable_mix(seed, k, x & _M64, y & _M64, ctr)
    return d % colors


def hashed_wang_id(seed: int, x: int, y: int, colors: int) -> WangTileId:
    """Wang id of cell (x, y) in the infinite hashed edge lattice."""
    return WangTileId(
        hash_edge_coloring(seed, "h", x, y, colors),
        hash_edge_coloring(seed, "v", x + 1, y, colors),
        hash_edge_coloring(seed, "h", x, y + 1, colors),
        hash_edge_coloring(seed, "v", x, y, colors),
    )


def hashed_cross_id(seed: int, x: int, y: int, colors: int) -> CrossTileId:
    """Cross id at lattice corner (x, y) of the infinite hashed lattice."""
    return CrossTileId(
        hash_edge_coloring(seed, "v", x, y - 1, colors),
        hash_edge_coloring(seed, "h", x, y, colors),
        hash_edge_coloring(seed, "v", x, y, colors),
        hash_edge_coloring(seed, "h", x - 1, y, colors),
    )
