"""Exception hierarchy shared by every module."""


class AutfixError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(AutfixError, ValueError):
    """An argument violates a documented precondition."""


class NotInvertibleError(InvalidInputError):
    """A residue has no multiplicative inverse for its modulus."""


class UnsupportedError(AutfixError):
    """The input is well formed but outside the supported case."""


class CapExceededError(UnsupportedError):
    """The requested group is larger than the enumeration cap."""
