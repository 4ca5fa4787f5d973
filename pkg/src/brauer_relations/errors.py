class BrauerError(Exception):
    """Base class for errors raised by this package."""


class InvalidInputError(BrauerError, ValueError):
    """Arguments that violate an operation's preconditions."""


class GroupTooLargeError(BrauerError):
    """A construction would exceed the enumeration bound."""

    def __init__(self, order, bound):
        super().__init__(f"group order {order} exceeds enumeration bound {bound}")
        self.order = order
        self.bound = bound


class NotNormalError(InvalidInputError):
    pass


class NotQuasiElementaryError(InvalidInputError):
    pass


class NotARelationError(InvalidInputError):
    pass
