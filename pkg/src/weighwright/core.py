"""Domain vocabulary: coin kinds and states, outcomes, itineraries, scenarios, strategies.

Outcomes are plain strings over ``"=<>"`` and itineraries plain strings over
``"LRO"``.  Both are immutable, hashable, and already the interchange encoding,
so no wrapper class is used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import InconsistentHypothesis, InvalidStateForKind, InvalidSymbol

EQ, LT, GT = "=", "<", ">"
OUTCOME_SYMBOLS = EQ + LT + GT  # also the canonical enumeration order

LEFT, RIGHT, OFF = "L", "R", "O"
ITINERARY_LETTERS = LEFT + RIGHT + OFF


class CoinKind(str, enum.Enum):
    LH = "lh"
    LR = "lr"
    LHR = "lhr"

    @property
    def states(self) -> tuple["CoinState", ...]:
        """States the kind cycles through, in cycle order starting from Light."""
        return _CYCLES[self]

    @property
    def cycle_length(self) -> int:
        return len(_CYCLES[self])


class CoinState(str, enum.Enum):
    LIGHT = "light"
    HEAVY = "heavy"
    REAL = "real"

    @property
    def weight(self) -> int:
        """Contribution to the pan holding the coin, relative to a genuine coin."""
        return _WEIGHTS[self]


_CYCLES = {
    CoinKind.LH: (CoinState.LIGHT, CoinState.HEAVY),
    CoinKind.LR: (CoinState.LIGHT, CoinState.REAL),
    CoinKind.LHR: (CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL),
}

_WEIGHTS = {CoinState.LIGHT: -1, CoinState.HEAVY: 1, CoinState.REAL: 0}

_OUTCOME_CONJ = str.maketrans("<>", "><")
_ITINERARY_CONJ = str.maketrans("LR", "RL")


def parse_kind(value: str | CoinKind) -> CoinKind:
    if isinstance(value, CoinKind):
        return value
    try:
        return CoinKind(value.lower())
    except ValueError:
        raise ValueError(f"unknown coin kind {value!r}; expected one of lh, lr, lhr") from None


def parse_state(value: str | CoinState) -> CoinState:
    if isinstance(value, CoinState):
        return value
    try:
        return CoinState(value.lower())
    except ValueError:
        raise ValueError(f"unknown coin state {value!r}; expected light, heavy or real") from None


def check_state(kind: CoinKind, state: CoinState) -> None:
    if state not in kind.states:
        raise InvalidStateForKind(f"{kind.name} coins never occupy the {state.value} state")


def check_outcome(x: str) -> str:
    if not isinstance(x, str) or x.strip(OUTCOME_SYMBOLS):
        raise InvalidSymbol(f"not an outcome string over '=<>': {x!r}")
    return x


def check_itinerary(d: str) -> str:
    if not isinstance(d, str) or d.strip(ITINERARY_LETTERS):
        raise InvalidSymbol(f"not an itinerary string over 'LRO': {d!r}")
    return d


def conjugate_outcome(x: str) -> str:
    """Swap ``<`` and ``>``; ``=`` is fixed."""
    return check_outcome(x).translate(_OUTCOME_CONJ)


def conjugate_itinerary(d: str) -> str:
    """Swap ``L`` and ``R``; ``O`` is fixed."""
    return check_itinerary(d).translate(_ITINERARY_CONJ)


def step_state(kind: CoinKind, s: CoinState, on_scale: bool) -> CoinState:
    """Advance the coin automaton by one weighing.

    The coin moves to the next state of its cycle exactly when it is on a pan.
    """
    cycle = _CYCLES[kind]
    if s not in cycle:
        raise InvalidStateForKind(f"{kind.name} coins never occupy the {s.value} state")
    if not on_scale:
        return s
    return cycle[(cycle.index(s) + 1) % len(cycle)]


def weighing_symbol(state: CoinState, letter: str) -> str:
    """Scale reading when the fake coin, in ``state``, sits at ``letter``."""
    if letter == OFF or state is CoinState.REAL:
        return EQ
    lighter_left = (state is CoinState.LIGHT) == (letter == LEFT)
    return LT if lighter_left else GT


def coin_outcome(kind: CoinKind, start: CoinState, itinerary: str) -> str:
    """Outcome produced when the coin following ``itinerary`` is the fake one."""
    check_state(kind, start)
    state = start
    symbols = []
    for letter in itinerary:
        symbols.append(weighing_symbol(state, letter))
        state = step_state(kind, state, letter != OFF)
    return "".join(symbols)


class Hypothesis(NamedTuple):
    """One case the strategy must handle: which coin is fake, and its start state."""

    coin_index: int
    start_state: CoinState


@dataclass(frozen=True)
class Scenario:
    """What is known about the fake coin before weighing.

    Exactly one of ``known`` / ``assigned`` is set for known and mixed starts;
    neither is set for an unknown start.  In a mixed scenario an ``assigned``
    entry of ``None`` marks a coin supplied as genuine.
    """

    kind: CoinKind
    num_coins: int
    known: Optional[CoinState] = None
    assigned: Optional[tuple[Optional[CoinState], ...]] = None

    def __post_init__(self):
        if self.num_coins < 0:
            raise ValueError("num_coins must be non-negative")
        if self.known is not None and self.assigned is not None:
            raise ValueError("a scenario is either known-uniform or mixed, not both")
        if self.known is not None:
            check_state(self.kind, self.known)
        if self.assigned is not None:
            if len(self.assigned) != self.num_coins:
                raise ValueError(
                    f"mixed scenario assigns {len(self.assigned)} states to {self.num_coins} coins"
                )
            for s in self.assigned:
                if s is not None:
                    check_state(self.kind, s)

    @classmethod
    def known_uniform(cls, kind: CoinKind, state: CoinState, num_coins: int) -> "Scenario":
        return cls(kind, num_coins, known=state)

    @classmethod
    def mixed(cls, kind: CoinKind, states: Sequence[Optional[CoinState]]) -> "Scenario":
        return cls(kind, len(states), assigned=tuple(states))

    @classmethod
    def mixed_blocks(
        cls, kind: CoinKind, l: int = 0, h: int = 0, r: int = 0, genuine: int = 0
    ) -> "Scenario":
        """Mixed scenario ordered as light block, heavy block, real block, genuine block."""
        states: list[Optional[CoinState]] = []
        states += [CoinState.LIGHT] * l
        states += [CoinState.HEAVY] * h
        states += [CoinState.REAL] * r
        states += [None] * genuine
        return cls.mixed(kind, states)

    @classmethod
    def unknown(cls, kind: CoinKind, num_coins: int) -> "Scenario":
        return cls(kind, num_coins)

    @property
    def mode(self) -> str:
        if self.known is not None:
            return "known"
        if self.assigned is not None:
            return "mixed"
        return "unknown"

    def admissible_states(self, coin_index: int) -> tuple[CoinState, ...]:
        if not 0 <= coin_index < self.num_coins:
            raise IndexError(f"coin {coin_index} out of range for {self.num_coins} coins")
        if self.known is not None:
            return (self.known,)
        if self.assigned is not None:
            s = self.assigned[coin_index]
            return () if s is None else (s,)
        return self.kind.states

    def hypotheses(self) -> list[Hypothesis]:
        return [
            Hypothesis(i, s) for i in range(self.num_coins) for s in self.admissible_states(i)
        ]

    def check_hypothesis(self, hyp: Hypothesis) -> None:
        if not 0 <= hyp.coin_index < self.num_coins:
            raise InconsistentHypothesis(f"coin {hyp.coin_index} does not exist")
        if hyp.start_state not in self.admissible_states(hyp.coin_index):
            raise InconsistentHypothesis(
                f"coin {hyp.coin_index} cannot start {hyp.start_state.value} in this scenario"
            )

    def block_counts(self) -> Optional[tuple[int, int, int, int]]:
        """``(l, h, r, genuine)`` if a mixed scenario is laid out in block order, else None."""
        if self.assigned is None:
            return None
        order = [CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL, None]
        ranks = [order.index(s) for s in self.assigned]
        if ranks != sorted(ranks):
            return None
        return tuple(ranks.count(k) for k in range(4))  # type: ignore[return-value]


@dataclass(frozen=True)
class Strategy:
    """An oblivious weighing plan: one itinerary per coin plus the scenario it targets."""

    scenario: Scenario
    itineraries: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "itineraries", tuple(self.itineraries))
        for d in self.itineraries:
            check_itinerary(d)
        if len(self.itineraries) != self.scenario.num_coins:
            raise ValueError(
                f"{len(self.itineraries)} itineraries for {self.scenario.num_coins} coins"
            )
        if len({len(d) for d in self.itineraries}) > 1:
            raise ValueError("itineraries must all have the same length")

    @property
    def kind(self) -> CoinKind:
        return self.scenario.kind

    @property
    def num_coins(self) -> int:
        return self.scenario.num_coins

    @property
    def weighings(self) -> int:
        return len(self.itineraries[0]) if self.itineraries else 0

    def weighing(self, i: int) -> tuple[list[int], list[int]]:
        """Coin indices on the left and right pan in weighing ``i`` (0-based)."""
        left = [c for c, d in enumerate(self.itineraries) if d[i] == LEFT]
        right = [c for c, d in enumerate(self.itineraries) if d[i] == RIGHT]
        return left, right
