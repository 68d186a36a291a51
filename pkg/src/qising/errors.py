"""Exception types shared across the package."""


class QisingError(Exception):
    """Base class for all package-specific errors."""


class OutOfWindow(QisingError):
    """An index or region needs qubit sites outside the configured window."""


class NotHermitian(QisingError):
    pass


class NotUnitary(QisingError):
    pass


class NotSimple(QisingError):
    """Algebra has a nontrivial center where a factor was required."""


class MarginTooSmall(QisingError):
    """Duality check needs at least one generator of margin on each side."""


class DimensionMismatch(QisingError):
    """Generated local algebra violates the 2^n(O) dimension law."""


class NotInSpan(QisingError):
    """Matrix is not in the span it was declared to live in."""


class BadLambdas(QisingError):
    """Weight quadruple violates positivity or normalization."""


class NotCommuting(QisingError):
    pass


class WrongTrace(QisingError):
    pass


class ZeroConditioner(QisingError):
    """Conditional probability requested on an event of ~zero probability."""


class NotFaithful(QisingError):
    pass


class NotCorrelated(QisingError):
    pass


class DegenerateEvent(QisingError):
    """Event projection is 0 or 1; nothing to explain."""


class BracketFailure(QisingError):
    """Root bracketing found no sign change; a precondition is violated."""


class RegionSelectionFailure(QisingError):
    """No admissible localization region fits in the window."""


class EmptyCommutant(QisingError):
    """Search space contains only scalars; no nontrivial candidate exists."""


class TruncationTooSmall(QisingError):
    pass


class ConfigError(QisingError):
    """Invalid run configuration; message carries the field path."""
