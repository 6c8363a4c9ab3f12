"""Domino strings and exact Dual Wang tile packings.

A packing is a C^2 x C^2 torus lattice that contains every Wang tile and
every cross tile exactly once.  Odd color counts come from one complete
domino string shifted in opposite directions; even color counts need a
two-string template because the single-string construction provably
collapses onto half of the tiles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from . import _kernels
from .core import CompletenessReport, EdgeLattice, check_complete, complement
from .errors import ResourceGuardError, ValidationError

Pair = tuple[int, int]


@dataclass(frozen=True)
class DominoString:
    """Cyclic color sequence; domino k is (seq[k], seq[k+1 mod len])."""

    colors: int
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.colors < 1:
            raise ValidationError("colors must be >= 1")
        if any(not 0 <= c < self.colors for c in self.seq):
            raise ValidationError("sequence color out of range")

    def __len__(self) -> int:
        return len(self.seq)

    def domino(self, k: int) -> Pair:
        return self.seq[k % len(self.seq)], self.seq[(k + 1) % len(self.seq)]

    def dominoes(self) -> Iterator[Pair]:
        return (self.domino(k) for k in range(len(self.seq)))

    def rotated(self, shift: int) -> "DominoString":
        n = len(self.seq)
        return DominoString(self.colors, tuple(self.seq[(k + shift) % n] for k in range(n)))


def make_domino_string(colors: int) -> DominoString:
    """Complete domino string: every ordered color pair appears exactly once.

    Construction: for each color f in ascending order, emit f once and then
    interleave f with every larger color.  Segment f starts with f itself
    and ends on the largest color, so the junctions and the wrap-around
    supply exactly the pairs the segments leave out.
    """
    if colors < 1:
        raise ValidationError("colors must be >= 1")
    seq: list[int] = []
    for f in range(colors):
        seq.append(f)
        for g in range(f + 1, colors):
            seq.extend((f, g))
    s = DominoString(colors, tuple(seq))
    if not is_complete_domino(s):  # fall back to an Eulerian walk if ever needed
        s = eulerian_domino_string(colors)
    return s


def eulerian_domino_string(colors: int, rng: Optional[np.random.Generator] = None) -> DominoString:
    """Complete domino string via a Hierholzer circuit.

    The complete digraph on C vertices with self-loops has in-degree equal
    to out-degree everywhere, so an Eulerian circuit always exists; its
    vertex sequence is a complete domino string.  ``rng`` shuffles the
    outgoing-edge order to sample different strings.
    """
    if colors < 1:
        raise ValidationError("colors must be >= 1")
    remaining: list[list[int]] = []
    for a in range(colors):
        targets = list(range(colors))
        if rng is not None:
            rng.shuffle(targets)
        remaining.append(targets)
    start = 0
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        if remaining[v]:
            stack.append(remaining[v].pop())
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    # circuit is a closed vertex walk of length C^2 + 1; drop the repeat.
    assert circuit[0] == circuit[-1]
    return DominoString(colors, tuple(circuit[:-1]))


def is_complete_domino(s: DominoString) -> bool:
    """True iff the C^2 cyclic consecutive pairs are pairwise distinct."""
    if len(s.seq) != s.colors**2:
        return False
    return len(set(s.dominoes())) == s.colors**2


@dataclass(frozen=True)
class CoverReport:
    """Exact-cover report over ordered color pairs."""

    complete: bool
    missing: tuple[Pair, ...]
    duplicated: tuple[tuple[Pair, int], ...]


def _cover_report(pairs: Iterable[Pair], colors: int) -> CoverReport:
    counts: dict[Pair, int] = {}
    for p in pairs:
        counts[p] = counts.get(p, 0) + 1
    all_pairs = [(a, b) for a in range(colors) for b in range(colors)]
    missing = tuple(p for p in all_pairs if p not in counts)
    duplicated = tuple((p, n) for p, n in sorted(counts.items()) if n > 1)
    return CoverReport(not missing and not duplicated, missing, duplicated)


@dataclass(frozen=True)
class DoubleDominoString:
    """Two neighboring vertical-edge strings for the even construction.

    ``d0`` serves even columns and ``d1`` odd columns; torus consistency
    forces d1[k] to be d0[k] reversed.
    """

    colors: int
    d0: tuple[Pair, ...]
    d1: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if len(self.d0) != len(self.d1):
            raise ValidationError("d0 and d1 must have equal length")


def check_double_conditions(d: DoubleDominoString) -> tuple[CoverReport, CoverReport, CoverReport]:
    """The three completeness conditions on a double domino string.

    (1) entries d0 at even rows plus d1 at odd rows cover all pairs once;
    (2) the same with the roles of d0/d1 swapped;
    (3) the per-row pairs (first(d_{k mod 2}[k]), first(d_{k+1 mod 2}[k]))
        cover all pairs once.
    """
    c = d.colors
    n = len(d.d0)
    cond1 = [d.d0[k] if k % 2 == 0 else d.d1[k] for k in range(n)]
    cond2 = [d.d1[k] if k % 2 == 0 else d.d0[k] for k in range(n)]
    cond3 = [
        (d.d0[k][0], d.d1[k][0]) if k % 2 == 0 else (d.d1[k][0], d.d0[k][0])
        for k in range(n)
    ]
    return _cover_report(cond1, c), _cover_report(cond2, c), _cover_report(cond3, c)


def _double_domino_search(colors: int) -> Optional[tuple[Pair, ...]]:
    """Backtracking search for d0 (d1 is its pointwise reverse).

    Tracks three exact covers while assigning rows in order:
      - placement cover: d0 at even rows, reversed d0 at odd rows;
      - the two chain covers over the first/second component sequences
        a(k)=d0[k][0] and b(k)=d0[k][1]: consecutive a-pairs starting at
        even rows together with b-pairs starting at odd rows, and vice
        versa.  These are exactly what make the assembled torus and its
        perpendicular reading complete.
    """
    L = colors * colors
    pairs = [(a, b) for a in range(colors) for b in range(colors)]
    used_place = set()
    used_chain_even = set()  # a-chain pairs starting at even k, b-chain at odd k
    used_chain_odd = set()
    d0: list[Pair] = []

    def chain_marks(k_prev: int, prev: Pair, cur: Pair) -> list[tuple[set, Pair]]:
        a_pair = (prev[0], cur[0])
        b_pair = (prev[1], cur[1])
        if k_prev % 2 == 0:
            return [(used_chain_even, a_pair), (used_chain_odd, b_pair)]
        return [(used_chain_odd, a_pair), (used_chain_even, b_pair)]

    def place(k: int) -> bool:
        if k == L:
            # close the cycle: chains from row L-1 back to row 0
            marks = chain_marks(L - 1, d0[L - 1], d0[0])
            if any(p in s for s, p in marks):
                return False
            return True
        for cand in pairs:
            placed = cand if k % 2 == 0 else (cand[1], cand[0])
            if placed in used_place:
                continue
            marks = chain_marks(k - 1, d0[k - 1], cand) if k > 0 else []
            if any(p in s for s, p in marks):
                continue
            used_place.add(placed)
            for s, p in marks:
                s.add(p)
            d0.append(cand)
            if place(k + 1):
                return True
            d0.pop()
            for s, p in marks:
                s.discard(p)
            used_place.discard(placed)
        return False

    return tuple(d0) if place(0) else None


def make_double_domino(colors: int) -> DoubleDominoString:
    """Double domino string passing all three completeness conditions."""
    if colors < 2 or colors % 2 != 0:
        raise ValidationError("double domino strings require an even C >= 2")
    d0 = _double_domino_search(colors)
    if d0 is None:  # cannot happen for the supported sizes; guard anyway
        raise ValidationError(f"no double domino string exists for C={colors}")
    d1 = tuple((b, a) for a, b in d0)
    dd = DoubleDominoString(colors, d0, d1)
    reports = check_double_conditions(dd)
    if not all(r.complete for r in reports):
        raise ValidationError("double domino search produced an invalid string")
    return dd


@dataclass(frozen=True)
class PackingGrid:
    """A C^2 x C^2 periodic lattice intended to be a Dual Wang packing."""

    lattice: EdgeLattice

    @property
    def colors(self) -> int:
        return self.lattice.colors

    @property
    def side(self) -> int:
        return self.lattice.width


def pack_odd(colors: int) -> PackingGrid:
    """Packing for odd C: H(x,y) = s(y-x), V(x,y) = s(x+y).

    Shifting the same complete string in opposite directions makes
    (y-x, x+y) a bijection on the torus (determinant 2 is invertible mod
    an odd C^2), so every north/south domino meets every west/east domino
    exactly once, and likewise for the perpendicular reading.
    """
    if colors % 2 == 0:
        raise ValidationError("pack_odd requires an odd C")
    s = make_domino_string(colors).seq
    L = colors * colors
    idx = np.arange(L)
    x = idx[None, :]
    y = idx[:, None]
    seq = np.asarray(s, dtype=np.int16)
    H = seq[(y - x) % L]
    V = seq[(x + y) % L]
    return PackingGrid(EdgeLattice(colors, H, V, periodic=True))


def pack_even(colors: int) -> PackingGrid:
    """Packing for even C: shifted single string for horizontal edges,
    unshifted double-string template for vertical edges."""
    if colors % 2 != 0:
        raise ValidationError("pack_even requires an even C")
    u = make_domino_string(colors).seq
    dd = make_double_domino(colors)
    L = colors * colors
    idx = np.arange(L)
    x = idx[None, :]
    y = idx[:, None]
    useq = np.asarray(u, dtype=np.int16)
    H = useq[(x + y) % L]
    a = np.asarray([p[0] for p in dd.d0], dtype=np.int16)
    b = np.asarray([p[1] for p in dd.d0], dtype=np.int16)
    V = np.where(x % 2 == 0, a[y], b[y])
    return PackingGrid(EdgeLattice(colors, H, V, periodic=True))


def pack(colors: int) -> PackingGrid:
    """Dual Wang packing for any C >= 1 (parity dispatch)."""
    if colors < 1:
        raise ValidationError("colors must be >= 1")
    return pack_odd(colors) if colors % 2 else pack_even(colors)


def naive_even_construction(colors: int) -> EdgeLattice:
    """The odd-color formulas applied verbatim to an even C.

    Not a valid packing: (y-x) + (x+y) is always even, so only the tiles
    on half of the index combinations appear, each twice.
    """
    if colors % 2 != 0:
        raise ValidationError("naive_even_construction requires an even C")
    s = make_domino_string(colors).seq
    L = colors * colors
    idx = np.arange(L)
    x = idx[None, :]
    y = idx[:, None]
    seq = np.asarray(s, dtype=np.int16)
    H = seq[(y - x) % L]
    V = seq[(x + y) % L]
    return EdgeLattice(colors, H, V, periodic=True)


def validate_packing(grid: PackingGrid) -> tuple[bool, tuple[CompletenessReport, CompletenessReport]]:
    """Check completeness of the lattice and of its complement."""
    direct = check_complete(grid.lattice)
    comp = check_complete(complement(grid.lattice))
    return direct.complete and comp.complete, (direct, comp)


def lattice_from_tile_indices(colors: int, cells: bytes | Iterable[int]) -> EdgeLattice:
    """Rebuild a periodic lattice from row-major packed tile indices."""
    side = colors * colors
    tiles = list(cells)
    if len(tiles) != side * side:
        raise ValidationError("wrong number of cells")
    c3 = colors**3
    H = np.zeros((side, side), dtype=np.int16)
    V = np.zeros((side, side), dtype=np.int16)
    for k, t in enumerate(tiles):
        y, x = divmod(k, side)
        H[y, x] = t // c3
        V[y, x] = t % colors
    return EdgeLattice(colors, H, V, periodic=True)


@dataclass(frozen=True)
class EnumerationResult:
    """Exhaustive enumeration of labeled packings plus common quotients.

    ``labeled`` counts distinct (H, V) edge assignments on the torus.
    ``up_to_translation`` quotients by the side*side torus translations;
    this is the normalization that yields the expected 9,408 for C=2.
    ``up_to_translation_and_color_swap`` additionally quotients by global
    color permutations.
    """

    labeled: int
    up_to_translation: int
    up_to_translation_and_color_swap: int
    grids: tuple[PackingGrid, ...] = ()


def _translation_canonical(cells: bytes, side: int) -> bytes:
    best = None
    for dy in range(side):
        for dx in range(side):
            shifted = bytes(
                cells[((y + dy) % side) * side + (x + dx) % side]
                for y in range(side)
                for x in range(side)
            )
            if best is None or shifted < best:
                best = shifted
    return best  # type: ignore[return-value]


def _color_swap_canonical(cells: bytes, colors: int, side: int) -> bytes:
    import itertools

    c3 = colors**3
    best = None
    for perm in itertools.permutations(range(colors)):
        mapped = bytes(
            (
                (perm[t // c3] * colors + perm[(t // (colors * colors)) % colors]) * colors
                + perm[(t // colors) % colors]
            )
            * colors
            + perm[t % colors]
            for t in cells
        )
        cand = _translation_canonical(mapped, side)
        if best is None or cand < best:
            best = cand
    return best  # type: ignore[return-value]


def enumerate_packings(
    colors: int,
    count_only: bool = True,
    allow_large: bool = False,
) -> EnumerationResult:
    """Exhaustively enumerate labeled Dual Wang packings.

    Backtracks over the torus cells placing each Wang tile exactly once
    with matching edges, pruning duplicate crosses as soon as a cross is
    fully determined.  The search is exponential; anything beyond C=2 is
    refused unless ``allow_large`` is set.
    """
    if colors < 1:
        raise ValidationError("colors must be >= 1")
    if colors > 2 and not allow_large:
        raise ResourceGuardError(
            f"enumerating C={colors} packings is intractable; pass allow_large to override"
        )
    count, raw = _kernels.count_packings(colors, collect=True)
    side = colors * colors
    canon = {_translation_canonical(g, side) for g in raw}
    canon_swap = {_color_swap_canonical(g, colors, side) for g in canon}
    grids: tuple[PackingGrid, ...] = ()
    if not count_only:
        grids = tuple(PackingGrid(lattice_from_tile_indices(colors, g)) for g in raw)
    return EnumerationResult(count, len(canon), len(canon_swap), grids)


def no_shift2_complete_string(colors: int, allow_slow: bool = False) -> bool:
    """True iff no complete domino string also has all stride-2 pairs distinct.

    The stride-2 condition is what a shift-by-two column template would
    need for the perpendicular reading to stay complete.  For C=1 the
    trivial string [0] satisfies both conditions, so the result is False;
    for even C the search confirms nonexistence (C=2 instantly, C=4 takes
    a few seconds and sits behind ``allow_slow``).
    """
    if colors < 1:
        raise ValidationError("colors must be >= 1")
    if colors > 2 and not allow_slow:
        raise ResourceGuardError(
            f"stride-2 search for C={colors} is long-running; pass allow_slow to override"
        )
    L = colors * colors
    seq = [0] * L
    used1 = set()  # consecutive pairs
    used2 = set()  # stride-2 pairs

    def place(k: int) -> bool:
        if k == L:
            closing = [
                (used1, (seq[L - 1], seq[0])),
            ]
            if L >= 2:
                closing.append((used2, (seq[L - 2], seq[0])))
                closing.append((used2, (seq[L - 1], seq[1 % L])))
            seen: list[tuple[set, Pair]] = []
            ok = True
            for s, p in closing:
                if p in s or any(s2 is s and p2 == p for s2, p2 in seen):
                    ok = False
                    break
                seen.append((s, p))
            return ok
        for c in range(colors):
            marks: list[tuple[set, Pair]] = []
            if k >= 1:
                marks.append((used1, (seq[k - 1], c)))
            if k >= 2:
                marks.append((used2, (seq[k - 2], c)))
            if any(p in s for s, p in marks) or len({(id(s), p) for s, p in marks}) < len(marks):
                continue
            seq[k] = c
            for s, p in marks:
                s.add(p)
            if place(k + 1):
                return True
            for s, p in marks:
                s.discard(p)
        return False

    if L == 1:
        return False  # [0] trivially satisfies both conditions
    return not place(0)


def grid_to_json(grid: PackingGrid) -> str:
    lat = grid.lattice
    doc = {
        "colors": lat.colors,
        "width": lat.width,
        "height": lat.height,
        "H": [int(v) for v in lat.H.ravel()],
        "V": [int(v) for v in lat.V.ravel()],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def grid_from_json(text: str) -> PackingGrid:
    doc = json.loads(text)
    try:
        colors = int(doc["colors"])
        width = int(doc["width"])
        height = int(doc["height"])
        H = np.asarray(doc["H"], dtype=np.int16).reshape(height, width)
        V = np.asarray(doc["V"], dtype=np.int16).reshape(height, width)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed packing grid document: {exc}") from exc
    return PackingGrid(EdgeLattice(colors, H, V, periodic=True))
