"""Exception hierarchy shared by the library and the command line."""


class TransferError(Exception):
    """Base class for every error raised by this package."""


class InputError(TransferError, ValueError):
    """Malformed input: out-of-bounds vertices, non-subgroup edges, grid mismatch."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(TransferError):
    """An operation was called on a grid it does not support (e.g. core on a non-chain)."""


class ResourceGuardError(TransferError):
    """The requested enumeration exceeds the configured vertex guard."""
