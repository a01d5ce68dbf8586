"""Exception hierarchy.

Every error carries a stable ``exit_code`` used by the command line tool.
"""


class RatTetraError(Exception):
    exit_code = 1


class ParseError(RatTetraError, ValueError):
    exit_code = 3


class ZeroDenominator(RatTetraError, ZeroDivisionError):
    exit_code = 4


class FieldMismatch(RatTetraError, TypeError):
    exit_code = 5


class NonSymmetricForm(RatTetraError, ValueError):
    exit_code = 6


class DegenerateForm(RatTetraError, ValueError):
    exit_code = 7


class DegenerateTetrahedron(RatTetraError, ValueError):
    exit_code = 8


class NullTriangle(RatTetraError, ValueError):
    exit_code = 9


class BadIndex(RatTetraError, IndexError):
    exit_code = 10


class MissingSpread(RatTetraError, ValueError):
    exit_code = 11


class NotPositiveDefinite(RatTetraError, ValueError):
    exit_code = 12


class UnsupportedField(RatTetraError, ValueError):
    exit_code = 13


class InternalConcurrencyFailure(RatTetraError, AssertionError):
    """The closed-form circumcentre missed one of the six midplanes."""

    exit_code = 14


EXIT_CODES = {
    cls.__name__: cls.exit_code
    for cls in (
        ParseError,
        ZeroDenominator,
        FieldMismatch,
        NonSymmetricForm,
        DegenerateForm,
        DegenerateTetrahedron,
        NullTriangle,
        BadIndex,
        MissingSpread,
        NotPositiveDefinite,
        UnsupportedField,
        InternalConcurrencyFailure,
    )
}
