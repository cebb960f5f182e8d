"""Exception types raised across the package.

Each class name doubles as the error name printed by the command line tool.
"""


class WeighError(Exception):
    """Base class for every error raised by weighwright."""


class InvalidStateForKind(WeighError, ValueError):
    """A coin state the coin kind never occupies (LH never Real, LR never Heavy)."""


class InvalidSymbol(WeighError, ValueError):
    """A string that is not a well-formed outcome or itinerary."""


class InvalidOutcome(WeighError, ValueError):
    """An outcome that the fake coin cannot produce from the given start state."""


class NotAValidLhrOutcome(WeighError, ValueError):
    pass


class UnsupportedBound(WeighError):
    pass


class TooManyCoins(WeighError):
    pass


class Unsolvable(WeighError):
    def __init__(self, message: str, reason: str = ""):
        super().__init__(message)
        self.reason = reason


class KnownImpossible(Unsolvable):
    pass


class InequalityViolated(WeighError):
    pass


class InsufficientGenuineCoins(WeighError):
    def __init__(self, message: str, needed: int = 0, available: int = 0):
        super().__init__(message)
        self.needed = needed
        self.available = available


class UnknownTableId(WeighError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class UnknownExampleId(WeighError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class InconsistentHypothesis(WeighError, ValueError):
    pass


class IllegitimateStrategy(WeighError):
    pass


class OutcomeNotProducible(WeighError):
    pass


class InfeasibleChoice(WeighError, ValueError):
    pass


class SearchCeilingExceeded(WeighError):
    def __init__(self, message: str, ceiling: tuple[int, int]):
        super().__init__(message)
        self.ceiling = ceiling


class DocumentError(WeighError, ValueError):
    """A strategy document that does not parse or violates its own invariants."""
