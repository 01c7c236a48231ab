"""Exception hierarchy shared by the library and the CLI."""

from typing import Optional

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_RUNTIME = 4


class NCBError(Exception):
    """Base class for every error raised by this package."""

    exit_code = EXIT_RUNTIME


class ConfigError(NCBError, ValueError):
    exit_code = EXIT_USAGE


class GraphParseError(NCBError, ValueError):
    """Malformed graph or partition input."""

    exit_code = EXIT_PARSE

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyGraphError(NCBError, ValueError):
    exit_code = EXIT_PARSE


class NodeDomainError(NCBError, ValueError):
    """Node id out of range or an invalid node set."""


class UndefinedConductanceError(NCBError, ValueError):
    """Conductance has a zero denominator (empty set, whole graph, zero volume)."""


class UndefinedGravitationError(NCBError, ValueError):
    pass


class ZeroVolumeError(NCBError, ValueError):
    pass


class NoSeedError(NCBError, ValueError):
    pass


class PartitionMismatchError(NCBError, ValueError):
    """A partition does not cover exactly the nodes of the graph it is used with."""

    exit_code = EXIT_PARSE
