"""
Error types for padyn
Every failure raised by the library derives from PadynError
"""

from typing import Optional, Any


class PadynError(Exception):
    """Base class for all padyn failures"""


class InputError(PadynError, ValueError):
    """Caller supplied an argument outside the operation's domain"""


class NotPrimeError(InputError):
    def __init__(self, p: Any):
        super().__init__(f"{p} is not a prime")
        self.p = p


class PreconditionError(InputError):
    """A documented precondition (squarefree input, nonzero polynomial, ...) failed"""


class DegenerateMapError(InputError):
    """g and h share a root (or vanish), so g/h is not a map of the stated degree"""

    def __init__(self, message: str, g: Any = None, h: Any = None):
        super().__init__(message)
        self.g = g
        self.h = h


class SingularCurveError(InputError):
    def __init__(self, a: Any, b: Any):
        super().__init__(f"y^2 = x^3 + ({a})x + ({b}) is singular: 4a^3 + 27b^2 = 0")
        self.a = a
        self.b = b


class ExpressionSyntaxError(InputError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


class NotPeriodicError(InputError):
    pass


class OrbitThroughInfinityError(InputError):
    pass


class ResourceLimitError(PadynError):
    """
    A configured size cap would be exceeded

    Attributes:
        attempted: the degree or step count that was requested
        limit: the active cap
        minimal_epsilon: smallest achievable tolerance under the cap (heights only)
        last_completed: last fully processed period or level (searches only)
    """

    def __init__(self, message: str, attempted: int, limit: int,
                 minimal_epsilon: Optional[float] = None,
                 last_completed: Optional[int] = None):
        super().__init__(message)
        self.attempted = attempted
        self.limit = limit
        self.minimal_epsilon = minimal_epsilon
        self.last_completed = last_completed


class ConvergenceError(PadynError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual
