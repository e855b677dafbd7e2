class LinrecError(Exception):
    """Base class for errors raised by this package."""


class RingMismatchError(LinrecError, TypeError):
    """Operands belong to different ring contexts."""


class NotInvertibleError(LinrecError, ArithmeticError):
    """A required inverse does not exist in the ring."""


class UnsupportedRootOrderError(LinrecError, ValueError):
    """The field lacks roots of unity of the requested order."""


class PreconditionError(LinrecError, ValueError):
    """An input violates an algorithm's stated assumptions."""
