"""Exception types shared across the package.

Selection-rule failures (inadmissible triads, nonzero projection sums) are
not errors anywhere in this package: the affected symbol is exactly zero.
Exceptions are reserved for structurally invalid input or geometry that a
formula cannot be evaluated on at all.
"""


class SpinNetError(Exception):
    """Base class for all domain errors raised by this package."""


class MalformedSpin(SpinNetError):
    """A spin argument is structurally invalid (negative magnitude,
    or a (j, m) pair whose doubled values have different parity)."""


class RadicandMismatch(SpinNetError):
    """Attempt to add two radical numbers with different square-free parts."""


class DivisionByZero(SpinNetError, ZeroDivisionError):
    """Exact division by an exact zero."""


class DegenerateGeometry(SpinNetError):
    """Tetrahedron is flat or classically forbidden where an asymptotic
    formula requires a positive Euclidean volume."""


class SizeExceeded(SpinNetError):
    """A combinatorial construction was requested beyond its configured cap."""


class NotConnected(SpinNetError):
    """No move path exists between two coupling trees.  Impossible for trees
    over the same leaf set; raised to flag inconsistent input or state."""


class NotClosed(SpinNetError):
    """A move sequence claimed to be a cycle does not return to its start."""


class InvalidParams(SpinNetError):
    """Polynomial family parameters outside their legal range."""


class OutOfRange(SpinNetError):
    """Degree or grid-point index outside the grid."""


class NonFinitePotential(SpinNetError):
    """A potential sample is NaN or infinite."""


class UnsupportedFormat(SpinNetError):
    """The requested output format does not apply to this command."""
