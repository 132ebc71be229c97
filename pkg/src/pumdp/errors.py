"""Exception types shared by every module.

The CLI maps them onto exit codes: usage/parameter/field/parse -> 2, capacity -> 3.
"""


class PumdpError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(PumdpError, ValueError):
    """Malformed call: shape mismatch, mixed towers, bad index sets."""


class FieldError(PumdpError, ArithmeticError):
    """Domain error inside field arithmetic (inverse of zero, reducible modulus)."""


class ParameterError(PumdpError, ValueError):
    """Code parameters outside the supported family."""


class CapacityError(PumdpError):
    """Requested work or element count exceeds what the field or budget allows."""


class FormatError(PumdpError, ValueError):
    """A code-spec, block or report file that does not parse."""
