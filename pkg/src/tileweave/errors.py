"""Exception hierarchy."""


class TileWeaveError(Exception):
    """Base class for all package errors."""


class ValidationError(TileWeaveError):
    """Invalid input, configuration, or geometry."""


class ConvergenceError(TileWeaveError):
    """An iterative solver hit its iteration cap before converging."""


class BackendError(TileWeaveError):
    """An inpainting backend failed (transport, protocol, or exhaustion)."""


class ResourceGuardError(TileWeaveError):
    """A combinatorial search was refused because it would run too long."""
