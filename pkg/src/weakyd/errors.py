"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .report import Report, Witness


class WeakYdError(Exception):
    """Base class. Carries an optional entry witness or a failing report."""

    def __init__(self, message: str, witness: Optional["Witness"] = None,
                 report: Optional["Report"] = None):
        super().__init__(message)
        self.witness = witness
        self.report = report


class ObjectMismatch(WeakYdError):
    pass


class NotIdempotent(WeakYdError):
    pass


class SingularMatrix(WeakYdError):
    pass


class SingularAntipode(SingularMatrix):
    pass


class Eq12Violation(WeakYdError):
    pass


class WybAxiomViolation(WeakYdError):
    pass


class InvalidGroupoid(WeakYdError):
    pass


class NotExactFactorization(WeakYdError):
    pass


class NotSeparableFrobenius(WeakYdError):
    pass


class NablaDeltaMismatch(WeakYdError):
    pass


class YdViolation(WeakYdError):
    pass


class NotSymmetricBase(WeakYdError):
    pass


class ProjectionInvalid(WeakYdError):
    pass


class NotProjectionMorphism(WeakYdError):
    pass


class ClosedFormMismatch(WeakYdError):
    pass


class PredicateNotSatisfied(WeakYdError):
    pass


class ParseError(WeakYdError):
    pass


class ValidationError(WeakYdError):
    pass
