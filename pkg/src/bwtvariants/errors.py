"""Exception types shared across the package."""


class BwtError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(BwtError):
    """Malformed input stream (FASTA or line format)."""


class ValidationError(BwtError):
    """A collection violates an invariant (empty sequence, reserved byte, k=0)."""


class TransformError(BwtError):
    """A transform is malformed or used with the wrong operation."""


class GuardError(BwtError):
    """A size or cost guard was exceeded."""
