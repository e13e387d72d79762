"""Exception types raised by the library and the CLI."""


class BeltramiError(Exception):
    """Base class for all errors raised by this package."""


class SquareDiscriminant(BeltramiError, ValueError):
    """The discriminant is a square in Q, so Q(sqrt d) is not a quadratic field."""


class ZeroDiscriminant(BeltramiError, ValueError):
    pass


class NotSymmetric(BeltramiError, ValueError):
    """The endomorphism is not symmetric with respect to the form."""


class DegenerateDenominator(BeltramiError, ZeroDivisionError):
    pass


class NotABasis(BeltramiError, ValueError):
    pass


class NotPOrthogonal(BeltramiError, ValueError):
    pass


class NotAntiNormLike(BeltramiError, ValueError):
    pass


class VanishingLinearPart(BeltramiError, ValueError):
    """The K-linear part of the map is zero, so no Beltrami form exists."""


class ZeroForm(BeltramiError, ValueError):
    pass


class ZeroMap(BeltramiError, ValueError):
    pass


class ExceptionalClass(BeltramiError, ValueError):
    """The conformal class lies on the exceptional line and has no affine coordinate."""


class ParseError(BeltramiError, ValueError):
    pass


class VectorMismatch(BeltramiError):
    def __init__(self, index: int, field: str, expected, actual):
        self.index = index
        self.field = field
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"record {index}: field {field!r} differs: expected {expected!r}, got {actual!r}"
        )
