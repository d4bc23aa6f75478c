from __future__ import annotations

from typing import Optional


class CRInvariantError(Exception):
    """Base class for every error the library raises on bad input."""


class NonUnitConstantTerm(CRInvariantError):
    pass


class ExpressionSyntaxError(CRInvariantError):
    def __init__(self, message: str, source: str = "", position: Optional[int] = None):
        self.source = source
        self.position = position
        if position is not None and source:
            message = f"{message} at position {position}\n  {source}\n  {' ' * position}^"
        super().__init__(message)


class GeneratorOutOfRange(CRInvariantError):
    pass


class InvalidDimension(CRInvariantError):
    pass


class WrongDegree(CRInvariantError):
    pass


class NotMonomial(CRInvariantError):
    pass


class NotSymmetric(CRInvariantError):
    pass


class BidegreeMismatch(CRInvariantError):
    pass


class DegreeTooLarge(CRInvariantError):
    pass


class DegreeMismatch(CRInvariantError):
    pass


class DegenerateForm(CRInvariantError):
    pass


class ConfigError(CRInvariantError):
    pass
