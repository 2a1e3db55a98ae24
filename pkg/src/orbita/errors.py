"""Exception hierarchy shared by every orbita module."""

from __future__ import annotations


class OrbitaError(Exception):
    """Base class for all library errors."""


class UnsupportedRank(OrbitaError, ValueError):
    """Lie type and rank combination outside the supported range."""


class DimensionMismatch(OrbitaError, ValueError):
    pass


class NotARoot(OrbitaError, ValueError):
    pass


class SingularSystem(OrbitaError, ArithmeticError):
    pass


class InvalidDiagram(OrbitaError, ValueError):
    """Label vector or characteristic element that does not give a usable diagram."""


class NonDominant(InvalidDiagram):
    pass


class NonIntegralLabel(InvalidDiagram):
    pass


class DegenerateDiagram(InvalidDiagram):
    """All labels zero: the zero orbit, which is never analysed."""


class NotClosed(OrbitaError, ValueError):
    pass


class UnrecognizedDiagram(OrbitaError, ValueError):
    pass


class UnmatchedFingerprint(OrbitaError):
    pass


class CatalogError(OrbitaError):
    """A catalog case produced data that fails validation."""


class InconsistencyError(OrbitaError):
    """Two independent computations of the same quantity disagree."""
