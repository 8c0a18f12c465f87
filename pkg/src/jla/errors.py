"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation was invoked on inputs that fail its stated prerequisites."""


class VerificationError(RuntimeError):
    """An exact check that is guaranteed for valid inputs came out false.

    This signals corrupted input or an implementation bug, never a normal
    negative result; negative results are report content, not exceptions.
    """
