"""Typed errors raised across the toolkit.

Validation problems (bad formats, bad values, inconsistent shapes) raise
subclasses of :class:`ValidationError`; filesystem trouble raises
:class:`IoFailure`. The CLI maps the former to exit code 1 and the latter
to exit code 2.
"""


class WgfError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(WgfError):
    """Input violates a declared contract or invariant."""


class IoFailure(WgfError):
    """Filesystem read/write failed."""


# grid file format
class BadMagic(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NonMonotoneAxis(ValidationError):
    pass


# CSV inputs
class ParseError(ValidationError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateId(ValidationError):
    pass


class OutOfRangeLatitude(ValidationError):
    pass


class NegativePower(ValidationError):
    pass


class NonMonotoneTimestamps(ValidationError):
    def __init__(self, plant_id):
        super().__init__(f"timestamps not strictly increasing for plant {plant_id!r}")
        self.plant_id = plant_id


# geometry
class NonFinite(ValidationError):
    pass


# spatial index
class EmptyInput(ValidationError):
    pass


class NonFiniteCoordinate(ValidationError):
    pass


class NonFiniteQuery(ValidationError):
    pass


# interpolation
class OutOfBounds(ValidationError):
    def __init__(self, dimension, message=""):
        super().__init__(message or f"query outside axis bounds in dimension {dimension}")
        self.dimension = dimension


class DegenerateAxis(ValidationError):
    pass


class UnknownVariable(ValidationError):
    pass


# dataset
class EmptySeries(ValidationError):
    pass


class IrregularCadence(ValidationError):
    pass


class TimeAxisMismatch(ValidationError):
    pass


class MissingTarget(ValidationError):
    def __init__(self, target_id):
        super().__init__(f"no power series for target {target_id!r}")
        self.target_id = target_id


class FracOutOfRange(ValidationError):
    pass


class StreamTooShort(ValidationError):
    def __init__(self, target_id, length, window):
        super().__init__(
            f"stream for target {target_id!r} has {length} rows, need more than {window}"
        )
        self.target_id = target_id


# neural
class ShapeMismatch(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class BadDescriptor(ValidationError):
    pass


class BadRange(ValidationError):
    pass


class OddDimension(ValidationError):
    pass


class NonFiniteLoss(WgfError):
    def __init__(self, epoch, loss):
        super().__init__(f"non-finite training loss {loss!r} at epoch {epoch}")
        self.epoch = epoch
        self.loss = loss


# CLI
class UnknownSubcommand(ValidationError):
    pass


class MissingConfigKey(ValidationError):
    def __init__(self, name):
        super().__init__(f"missing required config key {name!r}")
        self.name = name
