"""Exception types shared across the library.

The CLI maps these onto exit codes: format problems exit 2, semantic
precondition failures exit 3.
"""


class GraphFormatError(ValueError):
    """Malformed edge-list or weight-file input."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""
