from __future__ import annotations


class MagmaError(Exception):
    """Base class for library errors."""


class IndexOutOfRange(MagmaError):
    pass


class InvariantViolation(MagmaError):
    pass


class MissingIdentity(MagmaError):
    pass


class NoZeroDesignated(MagmaError):
    pass


class NotClosed(MagmaError):
    pass


class NotALoop(MagmaError):
    pass


class CapExceeded(MagmaError):
    pass


class InadmissibleSpec(MagmaError):
    pass


class FamilyConstraintViolation(MagmaError):
    pass


class NonModularCarrier(MagmaError):
    pass


class TaxonViolation(MagmaError):
    pass


class KindMismatch(MagmaError):
    pass


class ParseError(MagmaError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownCheck(MagmaError):
    pass
