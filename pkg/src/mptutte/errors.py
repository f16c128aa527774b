"""Exception types shared across the package.

The CLI maps these onto stable exit codes, so keep the hierarchy flat and
the distinctions meaningful: bad input data vs. broken axioms vs. an invalid
perspective vs. an internal cross-check that tripped.
"""


class DomainError(ValueError):
    """An argument is outside its domain (unknown element, size mismatch, empty set where forbidden)."""


class AxiomError(ValueError):
    """A basis or circuit family fails a matroid axiom; the message names witnesses."""


class PerspectiveError(ValueError):
    """A matroid pair fails the perspective (quotient) condition; the message names the violating circuit."""


class ParseError(ValueError):
    """Input document is malformed.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConsistencyError(RuntimeError):
    """Two routes that must agree by theorem disagreed; indicates an implementation bug."""
