"""Exhaustive simulation of oblivious strategies.

Every hypothesis (coin, start state) is played against the strategy and the
resulting outcome map is checked for legitimacy and decodability.  Nothing
here trusts the synthesis rules; this module is the ground truth.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    EQ,
    LEFT,
    OFF,
    RIGHT,
    CoinState,
    Hypothesis,
    Strategy,
    check_outcome,
    step_state,
)
from .errors import IllegitimateStrategy, OutcomeNotProducible


def simulate(strategy: Strategy, hyp: Hypothesis) -> str:
    """Play every weighing of ``strategy`` with ``hyp`` as the fake coin.

    Pan weights are integers: genuine coins weigh 0, the fake coin weighs -1,
    0 or +1 according to its current state.
    """
    strategy.scenario.check_hypothesis(hyp)
    kind = strategy.kind
    state = hyp.start_state
    symbols = []
    for i in range(strategy.weighings):
        letter = strategy.itineraries[hyp.coin_index][i]
        left = right = 0
        if letter == LEFT:
            left += state.weight
        elif letter == RIGHT:
            right += state.weight
        symbols.append(EQ if left == right else ("<" if left < right else ">"))
        state = step_state(kind, state, letter != OFF)
    return "".join(symbols)


@dataclass(frozen=True)
class Legitimacy:
    legitimate: bool
    pan_counts: tuple[tuple[int, int], ...]  # (left, right) per weighing

    def __bool__(self) -> bool:
        return self.legitimate


def check_legitimate(strategy: Strategy) -> Legitimacy:
    counts = []
    for i in range(strategy.weighings):
        left = sum(1 for d in strategy.itineraries if d[i] == LEFT)
        right = sum(1 for d in strategy.itineraries if d[i] == RIGHT)
        counts.append((left, right))
    return Legitimacy(all(a == b for a, b in counts), tuple(counts))


@dataclass
class VerificationReport:
    legitimate: bool
    decodable: bool
    outcome_map: dict[str, set[Hypothesis]] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.legitimate and self.decodable

    @property
    def num_hypotheses(self) -> int:
        return sum(len(h) for h in self.outcome_map.values())


def outcome_map(strategy: Strategy) -> dict[str, set[Hypothesis]]:
    result: dict[str, set[Hypothesis]] = defaultdict(set)
    for hyp in strategy.scenario.hypotheses():
        result[simulate(strategy, hyp)].add(hyp)
    return dict(result)


def verify_decodable(strategy: Strategy, require_legitimate: bool = True) -> VerificationReport:
    """Simulate all hypotheses and check that every outcome points at one coin.

    Several start states of the same coin may share an outcome only when that
    outcome is all ``=`` (a coin that is never weighed).
    """
    legit = check_legitimate(strategy)
    if require_legitimate and not legit:
        bad = [i + 1 for i, (a, b) in enumerate(legit.pan_counts) if a != b]
        raise IllegitimateStrategy(f"pans differ in size in weighing(s) {bad}")

    omap = outcome_map(strategy)
    violations = []
    for i, (a, b) in enumerate(legit.pan_counts):
        if a != b:
            violations.append(f"weighing {i + 1}: {a} coins on the left pan, {b} on the right")
    for x in sorted(omap):
        hyps = omap[x]
        coins = sorted({h.coin_index for h in hyps})
        if len(coins) > 1:
            described = ", ".join(f"coin {h.coin_index} {h.start_state.value}" for h in sorted(hyps))
            violations.append(f"outcome {x} is produced by {described}")
        elif len(hyps) > 1 and x.strip(EQ):
            violations.append(
                f"outcome {x} does not determine the start state of coin {coins[0]}"
            )
    decodable = not any("is produced by" in v for v in violations)
    return VerificationReport(bool(legit), decodable, omap, violations)


@dataclass(frozen=True)
class Decoded:
    coin_index: int
    state: Optional[CoinState]  # None when the start state is ambiguous

    @property
    def ambiguous(self) -> bool:
        return self.state is None


def decode(strategy: Strategy, observed: str) -> Decoded:
    """Name the fake coin (and its start state when determined) from an observed outcome."""
    check_outcome(observed)
    if len(observed) != strategy.weighings:
        raise OutcomeNotProducible(
            f"outcome has {len(observed)} symbols but the strategy has {strategy.weighings} weighings"
        )
    hyps = outcome_map(strategy).get(observed)
    if not hyps:
        raise OutcomeNotProducible(
            f"no hypothesis produces {observed}; the scale misreported or the scenario is wrong"
        )
    coins = {h.coin_index for h in hyps}
    if len(coins) > 1:
        raise OutcomeNotProducible(
            f"{observed} points at several coins {sorted(coins)}; the strategy is not decodable"
        )
    (coin,) = coins
    states = {h.start_state for h in hyps}
    return Decoded(coin, states.pop() if len(states) == 1 else None)
