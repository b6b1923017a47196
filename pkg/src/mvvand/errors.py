"""Exception hierarchy.

Every error carries a short machine-parsable ``code`` so the CLI can emit
single-line diagnostics with a stable prefix.
"""


class MvvandError(Exception):
    code = "error"


class RingMismatchError(MvvandError):
    """Operands belong to different rings."""
    code = "ring-mismatch"


class InexactDivisionError(MvvandError):
    """Division left a remainder in a ring where exactness was required."""
    code = "inexact-division"


class ExponentOverflowError(MvvandError):
    """A monomial exponent exceeds the packed-representation limit."""
    code = "exponent-overflow"


class ParseError(MvvandError):
    code = "parse-error"


class ShapeError(MvvandError):
    """Matrix shape violates an operation's precondition."""
    code = "shape-error"


class BadIndexError(MvvandError):
    """Row/column index selection is malformed or out of range."""
    code = "bad-index"


class BadRingError(MvvandError):
    """The ring is unsupported for the requested operation."""
    code = "bad-ring"


class NotEnoughPointsError(MvvandError):
    """Fewer than n+1 points: general position is undefined."""
    code = "not-enough-points"


class ZeroPointError(MvvandError):
    """An all-zero coordinate row is not a projective point."""
    code = "zero-point"


class SymbolicCapError(MvvandError):
    """Symbolic verification would exceed the configured size cap."""
    code = "symbolic-cap"
