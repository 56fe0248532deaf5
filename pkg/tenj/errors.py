"""Exceptions raised by tenj.

Bad input raises a ``ValueError`` subclass, a procedure that cannot finish raises a
``RuntimeError`` subclass.
"""


class MalformedFacet(ValueError):
    pass


class UnknownSimplex(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class NotAFace(ValueError):
    pass


class InvalidSite(ValueError):
    pass


class NameCollision(ValueError):
    pass


class InvalidCocycle(ValueError):
    pass


class UnsupportedTwist(ValueError):
    pass


class HexagonViolation(ValueError):
    pass


class PentagonViolation(ValueError):
    pass


class SingularPairing(ValueError):
    pass


class IndexMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Malformed input file. ``location`` names the offending path inside the file."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ValidationError(ValueError):
    """Well-formed data violating invariants; ``violations`` lists each of them."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NonOrientable(RuntimeError):
    pass


class NoValidMove(RuntimeError):
    pass


class ReductionSelfCheckFailed(RuntimeError):
    pass
