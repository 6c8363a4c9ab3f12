"""tileweave: mutually tileable texture tile sets via exterior boundary inpainting.

Tile identities and torus lattices live in :mod:`tileweave.core`, the exact
Dual Wang packing algorithms in :mod:`tileweave.packing`, boundary canvas
assembly in :mod:`tileweave.boundary`, inpainting backends in
:mod:`tileweave.inpaint`, tile-set generation in :mod:`tileweave.pipeline`,
and compositing/atlas construction in :mod:`tileweave.render`.
"""

from .errors import (
    BackendError,
    ConvergenceError,
    ResourceGuardError,
    TileWeaveError,
    ValidationError,
)

__version__ = "0.1.0"

__all__ = [
    "BackendError",
    "ConvergenceError",
    "ResourceGuardError",
    "TileWeaveError",
    "ValidationError",
    "__version__",
]
