"""Exception types raised across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graph input."""


class InvalidVertex(GraphError):
    pass


class SelfLoop(GraphError):
    def __init__(self, vertex: int, line: int | None = None):
        self.vertex = vertex
        self.line = line
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"self-loop on vertex {vertex}{where}")


class EmptyGraph(GraphError):
    pass


class TrivialGraph(GraphError):
    """Centrality is undefined on a single-vertex graph (divisor order - 1 = 0)."""


class DisconnectedInput(GraphError):
    pass


class InvalidFamilyParameter(ValueError):
    """A family size parameter is outside the range its closed form covers."""

    def __init__(
        self, family: str, parameter: str, value: int, minimum: int, maximum: int | None = None
    ):
        self.family = family
        self.parameter = parameter
        self.value = value
        self.minimum = minimum
        self.maximum = maximum
        if value < minimum:
            msg = f"{family}: {parameter}={value} is below the minimum {parameter} = {minimum}"
        else:
            msg = f"{family}: {parameter}={value} is outside the range [{minimum}, {maximum}]"
        super().__init__(msg)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
