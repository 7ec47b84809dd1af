"""Exception types shared by the library and the command line."""


class DataError(ValueError):
    """Malformed input, violated graph invariant or unmet precondition."""


class ComputabilityError(ArithmeticError):
    """A power or product left the binary64 range (overflowed or flushed to zero)."""

    def __init__(self, message, base=None, alpha=None):
        super().__init__(message)
        self.base = base
        self.alpha = alpha
