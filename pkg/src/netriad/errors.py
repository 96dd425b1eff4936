"""Exception hierarchy for netriad.

Three families matter to callers (and map to CLI exit codes):

- ``ConfigError`` (exit 2): the request itself is malformed.
- ``DataError`` (exit 3): an input file or dataset cannot be used.
- ``DegenerateMathError`` (exit 4): a measure is mathematically undefined
  for the given inputs (0/0 ratios, empty ensembles, exhausted pools).

Library code raises the most specific class; nothing is ever signalled
through sentinel return values, because silently mapping 0/0 to 0 or 1
would bias ensemble means.
"""


class NetriadError(Exception):
    """Base class for all package errors."""


class ConfigError(NetriadError):
    """A parameter combination or request is invalid."""


class NonMonotonicEdges(ConfigError):
    """Histogram bin edges are not strictly increasing."""


class DataError(NetriadError):
    """An input file or dataset is unusable."""


class ParseError(DataError):
    """A malformed record in a multiplex edge-list file.

    Attributes:
        line_number: 1-based line number of the offending record.
    """

    def __init__(self, message, line_number=None):
        super().__init__(message if line_number is None
                         else f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyInput(DataError):
    """The input stream contained no edge records."""


class UnknownLayer(DataError):
    """A requested layer name is not present in the dataset."""


class TooFewEdges(DataError):
    """A layer has fewer weighted edges than the requested window count."""


class DegenerateMathError(NetriadError):
    """A quantity is undefined for the given inputs."""


class UniverseMismatch(DegenerateMathError):
    """Set operation attempted across different node universes."""


class EmptyUnion(DegenerateMathError):
    """Both edge sets are empty, so the overlap ratio is 0/0."""


class EmptyConditionedUnion(DegenerateMathError):
    """The conditioning set covers the whole union; the conditional
    overlap (and hence the net difference) is undefined for this triplet."""


class DegenerateDenominator(DegenerateMathError):
    """An expected denominator in the per-pair probability oracle is 0."""


class NoVacantPair(DegenerateMathError):
    """No vacant node pair is available to receive a relocated edge."""


class InsufficientPairs(DegenerateMathError):
    """Too few non-degenerate randomized pairs to summarize a baseline."""


class EmptyEnsemble(DegenerateMathError):
    """An ensemble summary or histogram was requested for no values."""
