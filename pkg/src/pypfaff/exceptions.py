import logging

logger = logging.getLogger(__name__)


class PfaffException(Exception):
    pass


class PreconditionError(PfaffException, ValueError):
    pass


class ConeMembershipError(PreconditionError):

    def __init__(self, message, violated=()):
        super().__init__(message)
        self.violated = list(violated)


class NotGenericError(PfaffException):
    pass


class InternalError(PfaffException):
    """
    Raised when a statement that always holds on valid input fails at runtime.

    Seeing one of these means a bug, not bad input.
    """

    def __init__(self, message):
        if not message.startswith("internal:"):
            message = f"internal: {message}"
        logger.error(message)
        super().__init__(message)


__all__ = [
    "PfaffException",
    "PreconditionError",
    "ConeMembershipError",
    "NotGenericError",
    "InternalError",
]
