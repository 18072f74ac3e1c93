"""Exception hierarchy shared by the library and the CLI."""


class RealGrassError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(RealGrassError, ValueError):
    pass


class InvalidCover(RealGrassError, ValueError):
    """The target is not obtained from the source by bumping one entry."""


class UnsupportedSize(RealGrassError, ValueError):
    """The ambient dimension exceeds what the subset encoding supports."""


class InvalidComplex(RealGrassError, ValueError):
    """Consecutive differentials do not compose to zero."""


class ResourceLimit(RealGrassError):
    """The requested computation is larger than the configured limit."""


class DecompositionMismatch(RealGrassError):
    def __init__(self, message, cells=None):
        super().__init__(message)
        self.cells = cells
