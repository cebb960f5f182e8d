"""Synthesis, verification and bounds for balance-scale strategies that find one state-changing fake coin."""

from .core import CoinKind, CoinState, Hypothesis, Scenario, Strategy, conjugate_itinerary, conjugate_outcome
from .sequences import BoundClass, bound
from .synthesis import synth_known, synth_lh_mixed, synth_lhr_mixed, synth_lr_mixed
from .tables import builtin_strategy
from .verifier import decode, simulate, verify_decodable
from .adaptive import ScenarioCounts, WeighingChoice, solve_adaptive, scripted_strategy

__all__ = [
    "BoundClass",
    "CoinKind",
    "CoinState",
    "Hypothesis",
    "Scenario",
    "ScenarioCounts",
    "Strategy",
    "WeighingChoice",
    "bound",
    "builtin_strategy",
    "conjugate_itinerary",
    "conjugate_outcome",
    "decode",
    "scripted_strategy",
    "simulate",
    "solve_adaptive",
    "synth_known",
    "synth_lh_mixed",
    "synth_lhr_mixed",
    "synth_lr_mixed",
    "verify_decodable",
]
