"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class LocalSlicesError(Exception):
    exit_code = 1


class ValidationError(LocalSlicesError, ValueError):
    """Malformed input. ``pointer`` is a JSON pointer when the input came from a file."""

    exit_code = 2

    def __init__(self, message, pointer=None, point=None):
        super().__init__(message if pointer is None else f"{message} (at {pointer})")
        self.pointer = pointer
        self.point = point


class BoundaryError(LocalSlicesError):
    """A query needs neighbours that fall outside a finite window."""

    exit_code = 3


class ResourceError(LocalSlicesError):
    """A configured size cap was exceeded."""

    exit_code = 3


class AlgorithmFailure(LocalSlicesError):
    """An algorithm broke a contract it is proven to satisfy."""

    exit_code = 4
