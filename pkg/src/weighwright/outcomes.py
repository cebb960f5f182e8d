"""Which outcome strings a fake coin can produce, and the exclusive X-group partition.

Validity is decided two ways.  :func:`is_valid_outcome` applies the pattern
rules (imbalance parity for LHR, no adjacent imbalances for LR).
:func:`reachable_outcomes` is the brute-force oracle that runs the coin
automaton over every itinerary.  The test suite checks they agree.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator

from .core import (
    EQ,
    ITINERARY_LETTERS,
    OUTCOME_SYMBOLS,
    CoinKind,
    CoinState,
    check_outcome,
    check_state,
    coin_outcome,
    step_state,
)
from .errors import NotAValidLhrOutcome

L, H, R = CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL


class XGroup(str, enum.Enum):
    LX = "LX"
    HX = "HX"
    LRX = "LRX"
    LHX = "LHX"
    LHRX = "LHRX"

    @property
    def states(self) -> frozenset[CoinState]:
        """Start states able to produce the outcomes in this group."""
        return _XGROUP_STATES[self]


_XGROUP_STATES = {
    XGroup.LX: frozenset({L}),
    XGroup.HX: frozenset({H}),
    XGroup.LRX: frozenset({L, R}),
    XGroup.LHX: frozenset({L, H}),
    XGroup.LHRX: frozenset({L, H, R}),
}
_GROUP_BY_STATES = {v: k for k, v in _XGROUP_STATES.items()}


def _imbalance_positions(x: str) -> list[int]:
    return [i for i, s in enumerate(x) if s != EQ]


def is_valid_outcome(kind: CoinKind, start: CoinState, x: str) -> bool:
    """Pattern-rule test: can the fake coin starting in ``start`` produce ``x``?"""
    check_state(kind, start)
    check_outcome(x)
    if kind is CoinKind.LH:
        return True
    if start is R and x and x[0] != EQ:
        return False
    if kind is CoinKind.LR:
        return all(x[i] == EQ or x[i + 1] == EQ for i in range(len(x) - 1))
    # LHR: the imbalances the coin produces in the heavy phase must be followed by '='.
    # Light and real starts meet the heavy phase on even imbalances, a heavy start on odd ones.
    heavy_parity = 1 if start is H else 0
    for count, i in enumerate(_imbalance_positions(x), start=1):
        if count % 2 == heavy_parity and i + 1 < len(x) and x[i + 1] != EQ:
            return False
    return True


def _walk(kind: CoinKind, starts: Iterable[CoinState], w: int) -> Iterator[str]:
    """Depth-first walk over outcome prefixes tracking the set of possible coin states."""
    symbol_order = OUTCOME_SYMBOLS

    def step(states: frozenset[CoinState], symbol: str) -> frozenset[CoinState]:
        nxt = set()
        for s in states:
            if symbol == EQ:
                nxt.add(s)  # off the scale
                if s is R:
                    nxt.add(step_state(kind, s, True))
            elif s is not R:
                nxt.add(step_state(kind, s, True))
        return frozenset(nxt)

    def rec(prefix: str, states: frozenset[CoinState]) -> Iterator[str]:
        if len(prefix) == w:
            yield prefix
            return
        for symbol in symbol_order:
            nxt = step(states, symbol)
            if nxt:
                yield from rec(prefix + symbol, nxt)

    yield from rec("", frozenset(starts))


def _as_states(kind: CoinKind, start) -> tuple[CoinState, ...]:
    if isinstance(start, CoinState):
        starts = (start,)
    else:
        starts = tuple(start)
    for s in starts:
        check_state(kind, s)
    return starts


def enumerate_outcomes(kind: CoinKind, start, w: int) -> list[str]:
    """All outcomes of length ``w`` reachable from ``start`` (a state or a set of states).

    Returned in lexicographic order over the alphabet ``=<>``.
    """
    if w < 0:
        raise ValueError("w must be non-negative")
    return list(_walk(kind, _as_states(kind, start), w))


def count_outcomes(kind: CoinKind, start, w: int) -> int:
    return sum(1 for _ in _walk(kind, _as_states(kind, start), w))


def reachable_outcomes(kind: CoinKind, start, w: int) -> set[str]:
    """Oracle: simulate one coin along every one of the 3^w itineraries."""
    found = set()
    for s in _as_states(kind, start):
        for letters in itertools.product(ITINERARY_LETTERS, repeat=w):
            found.add(coin_outcome(kind, s, "".join(letters)))
    return found


def producing_states(x: str) -> frozenset[CoinState]:
    """LHR start states from which ``x`` is producible."""
    return frozenset(s for s in (L, H, R) if is_valid_outcome(CoinKind.LHR, s, x))


def classify_xgroup(x: str) -> XGroup:
    states = producing_states(x)
    if not states:
        raise NotAValidLhrOutcome(f"{x!r} cannot be produced by an LHR coin in any start state")
    try:
        return _GROUP_BY_STATES[states]
    except KeyError:
        raise AssertionError(f"{x!r} falls in an exclusive group assumed empty: {sorted(states)}")


def xgroup_outcomes(w: int) -> dict[XGroup, list[str]]:
    """Every LHR outcome of length ``w`` sorted into its X-group, lexicographic within a group."""
    groups: dict[XGroup, list[str]] = {g: [] for g in XGroup}
    for x in enumerate_outcomes(CoinKind.LHR, (L, H, R), w):
        groups[classify_xgroup(x)].append(x)
    return groups
