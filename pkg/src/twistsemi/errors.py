"""Exception hierarchy.

Validation failures carry a ``witness`` attribute: the first violating
tuple of element ids found in canonical order.
"""


class TwistSemiError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(TwistSemiError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAbelianAddition(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class NotDistributive(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


class NotAHomomorphism(ValidationError):
    pass


class UnknownAutomorphism(ValidationError):
    pass


class NotOverAut(ValidationError):
    pass


class NotUnderR(ValidationError):
    pass


class CapExceeded(TwistSemiError):
    """A configured size cap or search budget was exceeded."""

    def __init__(self, cap, limit, size):
        super().__init__(f"cap {cap!r} exceeded: size {size} > limit {limit}")
        self.cap = cap
        self.limit = limit
        self.size = size


class ParseError(TwistSemiError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class TargetMembershipFailure(AssertionError):
    """An image failed a membership test that holds by theorem; always a bug."""
