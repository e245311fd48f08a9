"""Shared exception types."""


class InputError(ValueError):
    """Malformed input: bad family data, bad law string, bad parameters."""


class ParseError(InputError):
    """A family file could not be parsed; the message carries line/position."""


class OutOfDomainError(ValueError):
    """Parameters fall outside the stated domain of a closed-form result.

    Callers that need a value anyway should fall back to the solver or the
    exhaustive oracle.
    """
