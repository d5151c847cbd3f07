"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class TarError(Exception):
    """Base class for every error raised by this package."""


class Graph6Error(TarError, ValueError):
    pass


class InvalidChar(Graph6Error):
    pass


class Truncated(Graph6Error):
    pass


class OrderTooLarge(TarError, ValueError):
    pass


class BadArgument(TarError, ValueError):
    pass


class KindUnsupportedOnGraph(TarError, ValueError):
    pass


class VertexNotInSet(TarError, ValueError):
    pass


class WrongDirection(TarError, ValueError):
    pass


class MethodPreconditionViolated(TarError, ValueError):
    pass


class SourceRequired(TarError, ValueError):
    pass
