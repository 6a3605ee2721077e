"""Exception types shared across the package."""


class BurnsideError(Exception):
    """Base class for all errors raised by this package."""


class NotAGroup(BurnsideError):
    """A Cayley table failed one of the group axioms."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAHomomorphism(BurnsideError):
    pass


class NotInjective(BurnsideError):
    pass


class TooLarge(BurnsideError):
    """A construction exceeded the configured order or size cap."""


class UnknownName(BurnsideError):
    pass


class NotInImage(BurnsideError):
    """A mark vector has no integral preimage in the Burnside ring."""

    def __init__(self, message, class_index):
        super().__init__(message)
        self.class_index = class_index


class InvalidAction(BurnsideError):
    pass


class GroupMismatch(BurnsideError):
    """Operands live over different groups."""


class InternalDefect(BurnsideError):
    """Two routes that must agree did not; this is a bug, not a user error."""
