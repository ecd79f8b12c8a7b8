class GraphmineError(Exception):
    """Base class for library errors."""


class UsageError(GraphmineError, ValueError):
    """A caller violated an operation's precondition (bad k, dead vertex, ...)."""


class EdgeListError(GraphmineError, ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
