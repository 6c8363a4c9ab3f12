"""Tile ids, edge lattices, complement, completeness, hashed coloring."""

import numpy as np
import pytest
from scipy.stats import chi2

from tileweave.core import (
    CrossTileId,
    EdgeLattice,
    WangTileId,
    check_complete,
    complement,
    hash_edge_coloring,
    hashed_wang_id,
)
from tileweave.errors import ValidationError
from tileweave.packing import naive_even_construction, pack


def trivial_lattice() -> EdgeLattice:
    z = np.zeros((1, 1), dtype=np.int16)
    return EdgeLattice(1, z, z)


# ---------------------------------------------------------------- tile_of


def test_tile_of_trivial_torus():
    lat = trivial_lattice()
    assert lat.tile_of(0, 0) == WangTileId(0, 0, 0, 0)


def test_tile_of_torus_period():
    lat = pack(3).lattice
    assert lat.tile_of(0, 0) == lat.tile_of(9, 9)
    assert lat.tile_of(-9, 4) == lat.tile_of(0, 4)


def test_tile_of_pack2_multiset_complete():
    lat = pack(2).lattice
    ids = [lat.tile_of(x, y) for y in range(4) for x in range(4)]
    assert len(set(ids)) == 16
    assert check_complete(lat).complete


# ---------------------------------------------------------------- cross_of


def test_cross_of_trivial():
    lat = trivial_lattice()
    assert lat.cross_of(0, 0) == CrossTileId(0, 0, 0, 0)


def test_cross_of_pack2_multiset_complete():
    lat = pack(2).lattice
    crosses = [lat.cross_of(x, y) for y in range(4) for x in range(4)]
    assert len(set(crosses)) == 16


def test_cross_cs_is_west_edge_by_definition():
    lat = pack(3).lattice
    for x, y in [(0, 0), (2, 5), (8, 1)]:
        assert lat.cross_of(x, y).cs == lat.v_at(x, y)


# ---------------------------------------------------------------- complement


def test_complement_trivial():
    lat = trivial_lattice()
    comp = complement(lat)
    assert comp.tile_of(0, 0) == lat.tile_of(0, 0)


def test_complement_tile_equals_cross_of_source():
    lat = pack(3).lattice
    comp = complement(lat)
    for x, y in [(0, 0), (3, 7), (8, 8), (5, 2)]:
        assert tuple(comp.tile_of(x, y)) == tuple(lat.cross_of(x, y))


def test_complement_of_packing_is_complete():
    assert check_complete(complement(pack(3).lattice)).complete


def test_double_complement_preserves_tile_multiset():
    lat = pack(2).lattice
    twice = complement(complement(lat))
    orig = sorted(map(tuple, (lat.tile_of(x, y) for y in range(4) for x in range(4))))
    new = sorted(map(tuple, (twice.tile_of(x, y) for y in range(4) for x in range(4))))
    assert orig == new


def test_complement_requires_periodic():
    H = np.zeros((3, 2), dtype=np.int16)
    V = np.zeros((2, 3), dtype=np.int16)
    lat = EdgeLattice(1, H, V, periodic=False)
    with pytest.raises(ValidationError):
        complement(lat)


# ---------------------------------------------------------------- check_complete


def test_check_complete_trivial():
    assert check_complete(trivial_lattice()).complete


def test_check_complete_constant_lattice():
    z = np.zeros((4, 4), dtype=np.int16)
    rep = check_complete(EdgeLattice(2, z, z))
    assert not rep.complete
    assert rep.duplicated == ((WangTileId(0, 0, 0, 0), 16),)
    assert len(rep.missing) == 15


def test_check_complete_naive_even_signature():
    # the single-string construction on an even C: half the tiles twice
    rep = check_complete(naive_even_construction(2))
    assert len(rep.duplicated) == 8
    assert all(count == 2 for _, count in rep.duplicated)
    assert len(rep.missing) == 8


def test_check_complete_dimension_mismatch():
    z = np.zeros((4, 4), dtype=np.int16)
    with pytest.raises(ValidationError):
        check_complete(EdgeLattice(3, z, z))


# ---------------------------------------------------------------- lattice plumbing


def test_edge_consistency_is_representational():
    lat = pack(2).lattice
    for y in range(4):
        for x in range(4):
            assert lat.tile_of(x, y).e == lat.tile_of(x + 1, y).w
            assert lat.tile_of(x, y).s == lat.tile_of(x, y + 1).n


@pytest.mark.parametrize("colors", [1, 2, 3, 4])
def test_canonical_index_roundtrip(colors):
    for idx in range(colors**4):
        tid = WangTileId.from_index(idx, colors)
        assert tid.index(colors) == idx
        cid = CrossTileId.from_index(idx, colors)
        assert cid.index(colors) == idx


def test_lattice_arrays_are_readonly():
    lat = pack(2).lattice
    with pytest.raises(ValueError):
        lat.H[0, 0] = 1


def test_non_periodic_out_of_range():
    H = np.zeros((3, 2), dtype=np.int16)
    V = np.zeros((2, 3), dtype=np.int16)
    lat = EdgeLattice(1, H, V, periodic=False)
    assert lat.tile_of(1, 1) == WangTileId(0, 0, 0, 0)
    with pytest.raises(ValidationError):
        lat.tile_of(2, 0)
    with pytest.raises(ValidationError):
        lat.cross_of(0, 0)  # reads V(0, -1)


# ---------------------------------------------------------------- hashed coloring


def test_hash_edge_coloring_deterministic():
    a = hash_edge_coloring(42, "h", 10, -3, 5)
    b = hash_edge_coloring(42, "h", 10, -3, 5)
    assert a == b
    assert 0 <= a < 5


def test_hash_edge_coloring_single_color():
    assert hash_edge_coloring(7, "v", 123, 456, 1) == 0


def test_hash_edge_coloring_kind_and_axis_matter():
    vals_h = {hash_edge_coloring(1, "h", x, 0, 7) for x in range(64)}
    vals_v = {hash_edge_coloring(1, "v", x, 0, 7) for x in range(64)}
    assert len(vals_h) > 1 and len(vals_v) > 1


def test_hash_edge_coloring_uniformity_chi_squared():
    colors = 3
    n = 1_000_000
    side = 1000
    counts = np.zeros(colors, dtype=np.int64)
    for y in range(side):
        for x in range(side):
            counts[hash_edge_coloring(99, "h", x, y, colors)] += 1
    expected = n / colors
    stat = float(((counts - expected) ** 2 / expected).sum())
    p = 1.0 - chi2.cdf(stat, df=colors - 1)
    assert p > 0.001, f"chi2={stat}, counts={counts}"


def test_hash_region_independence():
    # values inside a window equal the globally computed values
    window = [(x, y) for x in range(5, 9) for y in range(-2, 2)]
    global_vals = {p: hash_edge_coloring(5, "v", p[0], p[1], 4) for p in window}
    for (x, y), v in reversed(list(global_vals.items())):
        assert hash_edge_coloring(5, "v", x, y, 4) == v


def test_hashed_ids_are_edge_consistent():
    for x, y in [(0, 0), (5, 9), (-4, 2)]:
        a = hashed_wang_id(11, x, y, 3)
        b = hashed_wang_id(11, x + 1, y, 3)
        c = hashed_wang_id(11, x, y + 1, 3)
        assert a.e == b.w
        assert a.s == c.n
