"""Exception types shared across the toolkit."""


class ClubkitError(Exception):
    """Base class for every error raised by this package."""


class InvalidVertex(ClubkitError):
    """A vertex id is outside the graph's id range."""


class InvalidEdge(ClubkitError):
    """An edge is malformed, e.g. a self-loop."""


class EmptyGraph(ClubkitError):
    """The operation needs at least one vertex."""


class ParseError(ClubkitError):
    """Input text does not conform to the declared graph format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotAClique(ClubkitError):
    """The supplied vertex set is not a clique of the source graph."""


class InvalidK(ClubkitError):
    """The clique-size parameter is outside the supported range."""


class TooLarge(ClubkitError):
    """Input exceeds a guard that keeps exhaustive search tractable."""
