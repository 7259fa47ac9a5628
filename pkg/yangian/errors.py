"""
Exception hierarchy for the yangian package
"""


class YangianError(ValueError):
    """Base class for every domain error raised by the library"""


class WeightError(YangianError):
    """Malformed, non-dominant or size-mismatched highest weight"""


class IndexRangeError(YangianError):
    """Generator, minor or pattern index outside 1..n"""


class DimensionError(YangianError):
    """Vectors or matrices whose dimensions do not agree"""


class PreconditionError(YangianError):
    """Witness construction preconditions not met"""

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class ResourceCapError(YangianError):
    """Tensor dimension above the configured oracle cap"""

    def __init__(self, dim: int, cap: int):
        super().__init__(f"tensor dimension {dim} exceeds cap {cap}")
        self.dim = dim
        self.cap = cap
