"""Kernel selection: compiled extension if present, numpy/Python fallback otherwise.

Set ``TILEWEAVE_PURE=1`` to force the fallback (used by the benchmark and by
tests that compare both implementations).
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("TILEWEAVE_PURE", "") == "1":
    _impl = _fallback
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

IMPL = _impl.IMPL
sor_solve = _impl.sor_solve
count_packings = _impl.count_packings

__all__ = ["IMPL", "sor_solve", "count_packings"]
