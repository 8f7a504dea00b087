"""Exception types shared across the package."""


class ChipfireError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ChipfireError):
    """Malformed user input: bad facet lists, bad chains, bad flags."""


class PreconditionError(ChipfireError):
    """A documented precondition of an operation was violated."""


class NotPseudomanifoldError(ChipfireError):
    """Operation requires a pseudomanifold."""


class NotOrientableError(ChipfireError):
    """Operation requires an orientable pseudomanifold."""


class UnboundedSearchError(ChipfireError):
    """A search region that theory guarantees bounded came back unbounded.

    This is raised defensively instead of looping forever; it indicates a
    bug in the caller's setup (or in this package), never a valid input.
    """


class EnumerationLimitError(ChipfireError):
    """A combinatorial enumeration was refused because it is too large."""
