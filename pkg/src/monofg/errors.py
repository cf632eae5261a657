"""Exception hierarchy shared by all modules."""


class MonofgError(Exception):
    """Base class for every error raised by this package."""


class QuiverError(MonofgError, ValueError):
    pass


class EndpointMismatchError(QuiverError):
    pass


class NotMultipleError(QuiverError):
    pass


class NotClosedError(QuiverError):
    pass


class ParseError(MonofgError):
    def __init__(self, message, location=None):
        self.message = message
        self.location = location
        if location is not None:
            message = f"{location.line}:{location.column}: {message}"
        super().__init__(message)


class UnknownCorpusError(MonofgError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class PreconditionError(MonofgError):
    """Input violates a standing assumption (maps to CLI exit code 2)."""


class InfiniteDimensionError(PreconditionError):
    pass


class NonMinimalError(PreconditionError):
    pass


class ScopeError(PreconditionError):
    """The requested model is not available for this algebra class."""


class RegimeMismatchError(MonofgError, ValueError):
    pass


class SideConditionError(MonofgError, ValueError):
    pass


class NotApplicableError(MonofgError):
    pass


class ConsistencyError(MonofgError):
    """Internal cross-check failed (maps to CLI exit code 3)."""


class UnfactorizableError(ConsistencyError):
    def __init__(self, element, level, message=None):
        self.element = element
        self.level = level
        super().__init__(message or f"cannot factor R^{level} element {element}")
