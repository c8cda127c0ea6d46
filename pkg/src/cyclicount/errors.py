"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed group-spec text.

    ``position`` is the 0-based offset of the offending character in the
    original input string.
    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.text = text
        self.position = position


class ResourceLimitError(RuntimeError):
    """An iteration budget or enumeration cap would be exceeded."""


class InexactDivisionError(RuntimeError):
    """A division that is mathematically guaranteed to be exact left a
    remainder.  This is never caused by valid input; it signals a bug in
    the arithmetic."""
