import pytest

from weighwright.core import (
    CoinKind,
    CoinState,
    Hypothesis,
    Scenario,
    Strategy,
    coin_outcome,
    conjugate_itinerary,
    conjugate_outcome,
    parse_kind,
    parse_state,
    step_state,
)
from weighwright.errors import InconsistentHypothesis, InvalidStateForKind, InvalidSymbol

L, H, R = CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL


@pytest.mark.parametrize("x, expected", [("=<>", "=><"), ("===", "==="), ("", "")])
def test_conjugate_outcome(x, expected):
    assert conjugate_outcome(x) == expected
    assert conjugate_outcome(conjugate_outcome("<<>")) == "<<>"


@pytest.mark.parametrize("d, expected", [("LRO", "RLO"), ("OOO", "OOO")])
def test_conjugate_itinerary(d, expected):
    assert conjugate_itinerary(d) == expected
    assert conjugate_itinerary(conjugate_itinerary("LLR")) == "LLR"


def test_conjugation_rejects_bad_symbols():
    with pytest.raises(InvalidSymbol):
        conjugate_outcome("=x")
    with pytest.raises(InvalidSymbol):
        conjugate_itinerary("LQ")


def test_step_state_examples():
    assert step_state(CoinKind.LHR, L, True) is H
    assert step_state(CoinKind.LR, R, True) is L
    assert step_state(CoinKind.LHR, H, False) is H


@pytest.mark.parametrize("kind", list(CoinKind))
def test_cycle_returns_after_cycle_length_steps(kind):
    for s in kind.states:
        t = s
        for _ in range(kind.cycle_length):
            t = step_state(kind, t, True)
        assert t is s


def test_state_not_in_kind():
    with pytest.raises(InvalidStateForKind):
        step_state(CoinKind.LH, R, True)
    with pytest.raises(InvalidStateForKind):
        step_state(CoinKind.LR, H, False)


def test_weights():
    assert (L.weight, H.weight, R.weight) == (-1, 1, 0)


def test_coin_outcome_never_weighed_is_balanced():
    for kind in CoinKind:
        for s in kind.states:
            assert coin_outcome(kind, s, "OOOO") == "===="


def test_coin_outcome_lh_example():
    # light coin on the left: lighter left pan; then heavy on the right: heavier right pan
    assert coin_outcome(CoinKind.LH, L, "LR") == "<<"
    assert coin_outcome(CoinKind.LH, L, "LL") == "<>"


def test_parse_helpers():
    assert parse_kind("LHR") is CoinKind.LHR
    assert parse_state("heavy") is H
    with pytest.raises(ValueError):
        parse_kind("xyz")
    with pytest.raises(ValueError):
        parse_state("unknown")


def test_scenarios_and_hypotheses():
    assert len(Scenario.unknown(CoinKind.LHR, 4).hypotheses()) == 12
    assert len(Scenario.known_uniform(CoinKind.LR, R, 5).hypotheses()) == 5
    mixed = Scenario.mixed_blocks(CoinKind.LHR, 1, 2, 1, genuine=2)
    assert mixed.num_coins == 6
    assert [h.start_state for h in mixed.hypotheses()] == [L, H, H, R]
    assert mixed.block_counts() == (1, 2, 1, 2)
    assert Scenario.mixed(CoinKind.LHR, [H, L]).block_counts() is None
    with pytest.raises(InconsistentHypothesis):
        mixed.check_hypothesis(Hypothesis(4, L))
    with pytest.raises(InconsistentHypothesis):
        mixed.check_hypothesis(Hypothesis(0, H))
    with pytest.raises(ValueError):
        Scenario.mixed(CoinKind.LH, [R])


def test_strategy_shape_checks():
    s = Strategy(Scenario.unknown(CoinKind.LR, 2), ["LO", "RO"])
    assert s.weighings == 2
    assert s.weighing(0) == ([0], [1])
    with pytest.raises(ValueError):
        Strategy(Scenario.unknown(CoinKind.LR, 2), ["LO"])
    with pytest.raises(ValueError):
        Strategy(Scenario.unknown(CoinKind.LR, 2), ["LO", "R"])
