"""
Domain errors shared by every app.

All of them are ``ValueError`` subclasses so callers that only care about
"bad input" can catch ``ValueError``; management commands map them to usage
errors (exit status 2).
"""


class InvalidDenominator(ValueError):
    """Series denominator whose x^0 coefficient is not the constant 1."""


class DomainError(ValueError):
    """Parameters outside the domain an operation or identity is defined on."""


class FormatError(ValueError):
    """Malformed line in a b-file."""


class GapError(ValueError):
    """Non-contiguous indices in a b-file."""


class UnknownGenerator(ValueError):
    """Term generator name not present in the generator registry."""


class UnknownIdentity(ValueError):
    """Identity id not present in the identity catalog."""


class UnknownFamily(ValueError):
    """Polynomial family or generating function id that is not registered."""


class BoundExceeded(ValueError):
    """Exhaustive enumeration requested beyond the configured bound."""
