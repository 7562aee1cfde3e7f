"""Exception hierarchy shared across the toolkit."""


class LightconeError(Exception):
    """Base class for every error raised by the toolkit."""

    pass


class ResourceLimitError(LightconeError):
    """Raised when a configured cap (qubits, terms, enumeration, retries) is hit."""

    def __init__(self, message: str, cap: int | float) -> None:
        super().__init__(message)
        self.cap = cap
