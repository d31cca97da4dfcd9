"""Exception hierarchy shared by all modules.

The CLI maps these onto its exit-code contract: usage and precondition
problems exit 2, invariant violations exit 3.
"""


class ZariskiError(Exception):
    pass


class UsageError(ZariskiError, ValueError):
    """Bad input: mismatched rings, negative exponents, malformed jobs."""


class ParseError(UsageError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at offset {position}")


class PreconditionError(ZariskiError, ValueError):
    """A required certificate could not be produced for the given data."""


class InvariantError(ZariskiError, AssertionError):
    """Post-verification failed. Always an implementation bug."""


class ResourceError(ZariskiError, RuntimeError):
    """A configured computation budget was exhausted."""
