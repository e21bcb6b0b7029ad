"""Exception and warning types shared across the package."""


class ParameterError(ValueError):
    """Decoder parameters violate a precondition or feasibility bound."""


class NoSolutionError(RuntimeError):
    """The homogeneous interpolation system has only the trivial kernel."""


class CompressionError(RuntimeError):
    """Compressed-system construction hit an inconsistency.

    Raised when a row scheduled for pruning is not identically zero
    (the input vector was not actually zeroed on the agreed positions)
    or when compression leaves no unknowns at all.
    """


class OffsetNotCodewordWarning(UserWarning):
    """Periodicity projection used with p < d-1: the offset added to the
    input need not be a codeword, so codeword recovery is not guaranteed."""
