"""Exception hierarchy for cyclic-qplane."""

from __future__ import annotations


class QPlaneError(Exception):
    """Base exception for all library errors."""

    def __init__(self, message: str, position: int | None = None) -> None:
        super().__init__(message)
        self.position = position


class OrderError(QPlaneError):
    """Root-of-unity order outside the supported range (N < 2)."""

    pass


class OrderMismatchError(QPlaneError):
    """Operands built over different orders N."""

    pass


class HomogeneityError(QPlaneError):
    """Element is not homogeneous in form degree."""

    pass


class NotGeneratorError(QPlaneError):
    """Element lies outside span{1, x, y}, where the pairing is defined."""

    pass


class DegreeError(QPlaneError):
    """Form degree outside 0..N-1."""

    pass


class ExpressionError(QPlaneError):
    """Problem with a user-supplied expression."""

    pass


class ParseError(ExpressionError):
    """Syntax error in an expression."""

    def __init__(self, message: str, position: int, expected: str | None = None) -> None:
        super().__init__(message, position=position)
        self.expected = expected


class MixedAlgebraError(ExpressionError):
    """Plane symbols (x, y) and quantum-group symbols (a, b, c, d) used together."""

    pass


class ConfigError(QPlaneError):
    """Invalid option value."""

    pass


class UnknownTableError(QPlaneError):
    """Unknown table kind or output format."""

    pass
