"""
Exception hierarchy for ehrlab.

Every error raised on purpose by the library derives from EhrlabError so the
CLI can report it in one place. Errors caused by bad input also derive from
ValueError.
"""


class EhrlabError(Exception):
    """Root of all ehrlab errors."""


class DegenerateInterpolationError(EhrlabError, ValueError):
    """Interpolation nodes are missing or repeated."""


class NonSquareMatrixError(EhrlabError, ValueError):
    """A determinant was requested for a non-square matrix."""


class InvalidPosetError(EhrlabError, ValueError):
    """Malformed relation, cyclic cover list, bad Young shape or bad tree."""


class InconsistentComputationError(EhrlabError):
    """An exactness guarantee was violated; signals an implementation bug."""


class DimensionMismatchError(EhrlabError, ValueError):
    """A point and a polytope live in different dimensions."""


class BoundaryError(EhrlabError, ValueError):
    """Boundary data (lambda, mu, row sums, widths) is inconsistent."""


class NonPolynomialFitError(EhrlabError):
    """Sampled counts do not fit a polynomial of the assumed degree."""

    def __init__(self, message: str, expected: int, predicted: str):
        super().__init__(message)
        self.expected = expected
        self.predicted = predicted


class EnumerationLimitError(EhrlabError, ValueError):
    """A request exceeds the enumeration caps."""


class FixtureError(EhrlabError):
    """A fixture file is missing or malformed."""
