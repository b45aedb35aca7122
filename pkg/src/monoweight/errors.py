"""Exception types shared across the package."""


class MonoweightError(Exception):
    pass


class UnsupportedTypeError(MonoweightError, ValueError):
    """Affine type or rank outside A_n^(1) (n >= 1) and B_n^(1) (n >= 3)."""


class ParseError(MonoweightError, ValueError):
    pass


class NotInCrystalError(MonoweightError, ValueError):
    """The monomial does not lie in the connected component M(infinity)."""


class InconsistentSystemError(NotInCrystalError):
    """A cyclic difference system a_i - a_{i-1} = c_i with sum(c) != 0."""


class NoRemovableDeltaError(MonoweightError, ValueError):
    pass


class PathInconsistencyError(MonoweightError, AssertionError):
    """Two discovery paths to the same crystal element disagree on a statistic."""


class ImproperWallError(MonoweightError, AssertionError):
    pass
