"""Exception hierarchy shared across the package."""


class InnercapError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(InnercapError):
    pass


class EmptyIntervalError(InnercapError):
    """An interval was constructed with lo > hi."""


class RankDeficient(InnercapError):
    """The generator matrix does not have full row rank."""


class CenterOutside(InnercapError):
    """A fixed-center query was made with the center outside the set."""


class DegeneratePolytope(InnercapError):
    pass


class DimensionTooLarge(InnercapError):
    """An exponential-size enumeration exceeds its documented cap."""


class NoCertificate(InnercapError):
    """No inner certificate exists (scaling factor came out negative).

    Carries the computed factor so callers can report how far from
    certifiable the instance is.
    """

    def __init__(self, r: float, msg: str = ""):
        self.r = r
        super().__init__(msg or f"no inner certificate (scale factor r = {r:.6g})")


class EmptySolutionSet(InnercapError):
    pass


class EmptyIntersection(InnercapError):
    pass


class EmptyEffectiveTorque(InnercapError):
    pass


class Singular(InnercapError):
    pass


class SingularMass(Singular):
    pass


class LpError(InnercapError):
    pass


class NumericalFailure(LpError):
    """The LP solver could not certify any status for the problem."""
