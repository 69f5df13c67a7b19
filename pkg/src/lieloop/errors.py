"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can emit
stable error identifiers.
"""

from __future__ import annotations


class LieLoopError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class InvalidCartanType(LieLoopError):
    code = "invalid-cartan-type"


class NotDominant(LieLoopError):
    code = "not-dominant"


class CapExceeded(LieLoopError):
    """A configurable size/dimension guard was hit.

    ``partial`` holds whatever was computed before the cap fired (used by
    orbit enumeration, where a partial result is meaningful).
    """

    code = "cap-exceeded"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotModuleCharacter(LieLoopError):
    """Raised when character extraction meets a negative multiplicity."""

    code = "not-module-character"


class InvalidInput(LieLoopError):
    code = "invalid-input"
