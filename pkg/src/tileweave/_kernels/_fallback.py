"""Pure numpy / pure Python kernel implementations.

Same contracts as the compiled extension in ``_core.pyx``; selected by
``tileweave._kernels`` when the extension is unavailable or disabled.
"""

from __future__ import annotations

import numpy as np

IMPL = "fallback"


def sor_solve(
    img: np.ndarray,
    mask: np.ndarray,
    tol: float,
    max_sweeps: int,
    omega: float,
    check_every: int = 8,
) -> tuple[int, float]:
    """Red-black SOR relaxation of the discrete Laplace equation.

    ``img`` (float64, 2-D) is updated in place on ``mask``-true texels;
    mask-false texels are Dirichlet data.  Texels on the image border use
    replicated padding, i.e. a zero-flux condition toward missing
    neighbors.  Returns (sweeps run, final max residual), where the
    residual is max |mean4(neighbors) - value| over masked texels.
    """
    h, w = img.shape
    pad = np.pad(img, 1, mode="edge")
    ys, xs = np.nonzero(mask)
    if ys.size == 0:
        return 0, 0.0
    ys = ys + 1
    xs = xs + 1
    parity = (ys + xs) & 1
    groups = [(ys[parity == p], xs[parity == p]) for p in (0, 1)]

    def _refresh_border() -> None:
        pad[0, :] = pad[1, :]
        pad[-1, :] = pad[-2, :]
        pad[:, 0] = pad[:, 1]
        pad[:, -1] = pad[:, -2]

    def _residual() -> float:
        _refresh_border()
        nb = pad[ys - 1, xs] + pad[ys + 1, xs] + pad[ys, xs - 1] + pad[ys, xs + 1]
        return float(np.max(np.abs(0.25 * nb - pad[ys, xs])))

    res = _residual()
    sweeps = 0
    while res > tol and sweeps < max_sweeps:
        for gy, gx in groups:
            if gy.size == 0:
                continue
            _refresh_border()
            nb = pad[gy - 1, gx] + pad[gy + 1, gx] + pad[gy, gx - 1] + pad[gy, gx + 1]
            pad[gy, gx] = (1.0 - omega) * pad[gy, gx] + omega * 0.25 * nb
        sweeps += 1
        if sweeps % check_every == 0 or sweeps >= max_sweeps:
            res = _residual()
    img[:, :] = pad[1:-1, 1:-1]
    return sweeps, res


def count_packings(colors: int, collect: bool) -> tuple[int, list[bytes]]:
    """Count labeled C^2 x C^2 torus grids that use every Wang tile once
    with matching edges and whose crosses are also all distinct.

    Returns (count, grids) where each grid is ``side*side`` bytes of tile
    indices in row-major order (empty list unless ``collect``).
    """
    c = colors
    side = c * c
    ntiles = c**4
    c3 = c**3

    def n_of(t: int) -> int:
        return t // c3

    def e_of(t: int) -> int:
        return (t // (c * c)) % c

    def s_of(t: int) -> int:
        return (t // c) % c

    def w_of(t: int) -> int:
        return t % c

    by_nw: dict[tuple[int, int], list[int]] = {}
    for t in range(ntiles):
        by_nw.setdefault((n_of(t), w_of(t)), []).append(t)
    all_tiles = list(range(ntiles))

    # Scan position at which each cross becomes fully determined: cross
    # (x, y) reads tiles (x, y), (x, y-1 wrap), (x-1 wrap, y).
    cross_ready: list[list[tuple[int, int]]] = [[] for _ in range(side * side)]
    for cy in range(side):
        for cx in range(side):
            deps = [
                cy * side + cx,
                ((cy - 1) % side) * side + cx,
                cy * side + (cx - 1) % side,
            ]
            cross_ready[max(deps)].append((cx, cy))

    grid = [-1] * (side * side)
    used = [False] * ntiles
    cross_used = [False] * ntiles
    out: list[bytes] = []
    count = 0

    def cross_idx(cx: int, cy: int) -> int:
        cn = w_of(grid[((cy - 1) % side) * side + cx])
        ce = n_of(grid[cy * side + cx])
        cs = w_of(grid[cy * side + cx])
        cw = n_of(grid[cy * side + (cx - 1) % side])
        return ((cn * c + ce) * c + cs) * c + cw

    def place(k: int) -> None:
        nonlocal count
        if k == side * side:
            count += 1
            if collect:
                out.append(bytes(grid))
            return
        y, x = divmod(k, side)
        if y > 0:
            n_req = s_of(grid[(y - 1) * side + x])
            if x > 0:
                cands = by_nw[(n_req, e_of(grid[k - 1]))]
            else:
                cands = [t for t in all_tiles if n_of(t) == n_req]
        else:
            if x > 0:
                w_req = e_of(grid[k - 1])
                cands = [t for t in all_tiles if w_of(t) == w_req]
            else:
                cands = all_tiles
        for t in cands:
            if used[t]:
                continue
            # torus wrap constraints close when the last column/row is placed
            ref_w = grid[y * side] if x > 0 else t
            if x == side - 1 and e_of(t) != w_of(ref_w):
                continue
            ref_n = grid[x] if y > 0 else t
            if y == side - 1 and s_of(t) != n_of(ref_n):
                continue
            grid[k] = t
            used[t] = True
            marked: list[int] = []
            ok = True
            for cx, cy in cross_ready[k]:
                ci = cross_idx(cx, cy)
                if cross_used[ci]:
                    ok = False
                    break
                cross_used[ci] = True
                marked.append(ci)
            if ok:
                place(k + 1)
            for ci in marked:
                cross_used[ci] = False
            used[t] = False
            grid[k] = -1

    place(0)
    return count, out
