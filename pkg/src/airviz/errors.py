"""Exception types shared across the package."""


class AirvizError(Exception):
    """Base class for all airviz errors."""


class NonAqiPollutant(AirvizError):
    """The pollutant has no breakpoint segments, so no sub-index exists."""


class UnitMismatch(AirvizError):
    """Concentration unit differs from the breakpoint table's unit."""


class OutOfRange(AirvizError):
    pass


class EmptyInput(AirvizError):
    pass


class EmptyRegistry(AirvizError):
    pass


class UnsortedInput(AirvizError):
    pass


class UnknownStation(AirvizError):
    pass


class DuplicateId(AirvizError):
    pass


class MismatchedInputs(AirvizError):
    pass


class StorageFailure(AirvizError):
    pass


class BadRange(AirvizError):
    pass
