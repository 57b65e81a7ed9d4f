"""Exceptions shared across modules."""


class CapabilityError(RuntimeError):
    """Input exceeds a documented size cap; the operation refuses rather than guess."""


class PreconditionError(ValueError):
    """A stated hypothesis of an operation does not hold for the given input."""
