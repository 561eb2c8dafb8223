"""Shared exception types."""


class GuardExceeded(RuntimeError):
    """Raised when an exhaustive computation is refused at desk scale.

    Every enumeration entry point takes an explicit keyword to raise its
    guard, so going past the default is always a conscious choice.
    """
