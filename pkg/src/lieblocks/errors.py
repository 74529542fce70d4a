class LieBlocksError(ValueError):
    """Base class for domain errors (bad input, refused computation)."""


class InvalidAlgebraError(LieBlocksError):
    pass


class WeightError(LieBlocksError):
    pass


class CapExceededError(LieBlocksError):
    """A guarded enumeration (orbit, weight system, Weyl group) hit its cap."""


class SkewnessError(LieBlocksError):
    pass


class MorphismError(LieBlocksError):
    pass


class IntegralityError(LieBlocksError):
    """A quantity that must be an integer was not (precision or data bug)."""
