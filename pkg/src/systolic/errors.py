"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: bad simplex, bad parameters, unparsable file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(ValueError):
    """Operation called outside its domain (e.g. a simplex not in the complex)."""


class HypothesisError(Exception):
    """A hypothesis of the Helly construction fails; ``witness`` says which."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalError(RuntimeError):
    """A construction invariant was violated. Always a bug."""
