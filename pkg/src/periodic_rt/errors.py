"""Exception types. Every error records the ``module.operation`` it came from."""

from __future__ import annotations


class ArtifactError(Exception):
    """Base class; ``origin`` names the module and operation that raised."""

    def __init__(self, message: str, origin: str = ""):
        super().__init__(message)
        self.origin = origin

    def __str__(self) -> str:
        msg = super().__str__()
        return f"[{self.origin}] {msg}" if self.origin else msg


class InputError(ArtifactError):
    pass


class Indeterminate(ArtifactError):
    """Verdict cannot be decided (as opposed to decided false)."""


# ring
class DivisionByZero(ArtifactError, ZeroDivisionError):
    pass


class FieldMismatch(ArtifactError, ValueError):
    pass


class NotIntegral(ArtifactError, ValueError):
    pass


class NonInvertibleDenominator(Indeterminate):
    pass


# category
class RankNotFound(ArtifactError):
    pass


class DegenerateDatum(ArtifactError):
    pass


# tangles and skein evaluation
class MalformedDiagram(InputError):
    pass


class ColorOutOfRange(InputError):
    pass


class WidthOverflow(ArtifactError):
    pass


class QuantumIntegerZero(ArtifactError):
    pass


class ArityMismatch(InputError):
    pass


# topology
class NotSymmetric(InputError):
    pass


class SingularAtOmega(ArtifactError):
    pass


class PrecisionFailure(Indeterminate):
    pass


# invariants
class FreenessFailed(ArtifactError):
    pass
