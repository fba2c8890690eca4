"""Exception types shared across the package."""


class KappaForgeError(ValueError):
    """Base class for every error this package raises on bad input."""


class DomainError(KappaForgeError):
    """An operation was invoked outside its mathematical domain."""


class ParseError(KappaForgeError):
    """Malformed textual input: class monomials, weight lists, data files."""
