"""Exception types shared across the package.

The CLI maps these onto exit codes: usage problems exit 1, file/format
problems exit 2, numeric failures exit 3.
"""


class UapkitError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(UapkitError, ValueError):
    """Operand shapes do not conform; message names both shapes."""


class FormatError(UapkitError):
    """Base class for container/file format problems."""


class BadMagicError(FormatError):
    """File does not start with the expected magic bytes."""


class VersionMismatchError(FormatError):
    """Container format version is not supported."""


class LengthMismatchError(FormatError):
    """Declared and actual byte/record counts disagree (truncation included)."""


class ManifestError(FormatError):
    """Manifest is malformed or internally inconsistent with the payload."""


class NonFiniteValueError(UapkitError):
    """A tensor that must be finite contains NaN or infinity."""


class TrainingDivergedError(UapkitError):
    """Loss became non-finite during optimization."""

    def __init__(self, epoch, message=None):
        self.epoch = epoch
        super().__init__(message or f"training diverged at epoch {epoch}")


class DegenerateBoundaryError(UapkitError):
    """Two classifier rows coincide, so the boundary distance is undefined."""
