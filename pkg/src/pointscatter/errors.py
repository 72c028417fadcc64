"""Exception types shared across the package."""

from __future__ import annotations


class PointScatterError(Exception):
    """Base class for every error this package raises on purpose."""


class NonPositiveWavenumberError(PointScatterError, ValueError):
    """Wavenumber must be finite, real and strictly positive."""


class BadOrderingError(PointScatterError, ValueError):
    """Interaction positions must be strictly increasing left to right."""


class OpaqueInteractionError(PointScatterError, ValueError):
    """A transfer matrix was requested for a non-transmitting interaction."""


class DegenerateDenominatorError(PointScatterError, ArithmeticError):
    """The round-trip denominator 1 - R R' vanished; amplitudes undefined."""


class NotUnitaryError(PointScatterError, ValueError):
    """Matrix fails the unitarity precondition."""


class PoleError(PointScatterError, ArithmeticError):
    """A resonance equation was evaluated at a pole of its right-hand side."""

    def __init__(self, k: float, message: str | None = None):
        self.k = k
        super().__init__(message or f"right-hand side has a pole at k = {k!r}")


class WrongClassError(PointScatterError, ValueError):
    """A resonance equation was requested for a non-matching classification."""


class IllConditionedError(PointScatterError, ArithmeticError):
    """A linear system is too ill conditioned to trust its solution."""


class DegenerateQuarticError(PointScatterError, ValueError):
    """All quartic coefficients vanish: the configuration is a classified
    family where perfect transmission is not pinned to isolated wavenumbers."""
