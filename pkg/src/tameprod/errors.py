"""Exception types shared across the package."""


class CalculusError(Exception):
    """Base class for all domain errors raised by this package."""


class NotDominant(CalculusError):
    """An integer tuple is not weakly decreasing (or not canonical)."""


class MixedSigns(CalculusError):
    """A signature mixes strictly positive and strictly negative entries."""


class TooShort(CalculusError):
    """A padding length is smaller than the signature length."""


class RankTooSmall(CalculusError):
    """The column truncation k cannot hold a signature."""


class EmptyProduct(CalculusError):
    """A tensor decomposition was requested with no factors."""


class DimensionMismatch(CalculusError):
    """A matrix does not conform to the expected row/column layout."""


class IndexOutOfRange(CalculusError):
    """A generator index lies outside the 1..p / 1..q window."""


class WeightMismatch(CalculusError):
    """Monomials fed to the unipotent solver do not share one weight."""


class NotSymmetric(CalculusError):
    """Schur decomposition was attempted on a non-symmetric polynomial."""


class RowAllocationViolation(CalculusError):
    """A factor state uses rows outside its allocated block."""


class SpanViolation(CalculusError):
    """A transformed dual state leaves the provided span."""


class SelfCheckError(CalculusError):
    """The invariant-basis dimension disagrees with the Weyl multiplicity."""


class ExpressionSyntaxError(CalculusError):
    """Raised by the CLI expression parser; carries the offset of the error."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
