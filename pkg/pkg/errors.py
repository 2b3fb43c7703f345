"""
dpwheel - Error hierarchy

Every failure raised by the library derives from DPWError so the CLI can
report it uniformly and map it to an exit code.
"""


class DPWError(Exception):
    """Base class for all dpwheel errors"""


class AmbientMismatchError(DPWError, ValueError):
    """Two elements (or an element and a graph) live on different vertex sets"""


class InvalidElementError(DPWError, ValueError):
    """Malformed partial injection or JSON element encoding"""


class InvalidParameterError(DPWError, ValueError):
    """Parameter out of range (n, generator index, vertex id, ...)"""


class CapExceededError(DPWError):
    """A configured size cap was hit"""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.cap = cap


class NotAMemberError(DPWError, ValueError):
    """Element does not belong to the monoid the operation requires"""


class FactorizationError(DPWError):
    """A constructive factorization step broke its own guarantee"""


class ClosureMismatchError(DPWError):
    """A closure is not the monoid a routine was asked to analyse"""


class ConfigError(DPWError):
    """Unreadable or invalid configuration"""
