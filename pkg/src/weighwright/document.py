"""JSON interchange format for oblivious strategies (``.wwjson``).

Mixed scenarios are stored as a counts string in the coin kind's cycle order
(``l:h`` for LH, ``l:r`` for LR, ``l:h:r`` for LHR) plus a genuine count; the
coins are laid out in light, heavy, real, genuine blocks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .core import CoinKind, CoinState, Scenario, Strategy, parse_kind, parse_state
from .errors import DocumentError

FORMAT_VERSION = "1"
_STATE_ORDER = (CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL)


def format_counts(kind: CoinKind, l: int, h: int, r: int) -> str:
    by_state = {CoinState.LIGHT: l, CoinState.HEAVY: h, CoinState.REAL: r}
    return ":".join(str(by_state[s]) for s in _STATE_ORDER if s in kind.states)


def parse_counts(kind: CoinKind, text: str) -> tuple[int, int, int]:
    """``l:h``, ``l:r`` or ``l:h:r`` (by kind) into an ``(l, h, r)`` triple."""
    states = [s for s in _STATE_ORDER if s in kind.states]
    parts = text.split(":")
    if len(parts) != len(states):
        names = ":".join(s.value[0] for s in states)
        raise ValueError(f"{kind.name} counts look like {names}, got {text!r}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"counts must be integers, got {text!r}") from None
    if min(values) < 0:
        raise ValueError(f"counts must be non-negative, got {text!r}")
    by_state = dict(zip(states, values))
    return tuple(by_state.get(s, 0) for s in _STATE_ORDER)  # type: ignore[return-value]


@dataclass(frozen=True)
class StrategyDocument:
    coin_kind: CoinKind
    scenario: dict[str, Any]
    num_coins: int
    weighings: int
    itineraries: tuple[str, ...]
    provenance: str = ""
    version: str = FORMAT_VERSION

    @classmethod
    def from_strategy(cls, strategy: Strategy, provenance: str = "") -> "StrategyDocument":
        sc = strategy.scenario
        if sc.mode == "known":
            scenario: dict[str, Any] = {"type": "known", "state": sc.known.value}
        elif sc.mode == "unknown":
            scenario = {"type": "unknown"}
        else:
            blocks = sc.block_counts()
            if blocks is None:
                raise DocumentError("mixed scenario is not laid out in light, heavy, real, genuine blocks")
            l, h, r, g = blocks
            scenario = {"type": "mixed", "counts": format_counts(sc.kind, l, h, r), "genuine": g}
        return cls(sc.kind, scenario, sc.num_coins, strategy.weighings, strategy.itineraries, provenance)

    def to_strategy(self) -> Strategy:
        kind, n = self.coin_kind, self.num_coins
        t = self.scenario.get("type")
        if t == "known":
            scenario = Scenario.known_uniform(kind, parse_state(self.scenario["state"]), n)
        elif t == "unknown":
            scenario = Scenario.unknown(kind, n)
        elif t == "mixed":
            l, h, r = parse_counts(kind, self.scenario["counts"])
            scenario = Scenario.mixed_blocks(kind, l, h, r, int(self.scenario.get("genuine", 0)))
        else:
            raise DocumentError(f"unknown scenario type {t!r}")
        if scenario.num_coins != n:
            raise DocumentError(f"scenario describes {scenario.num_coins} coins, num_coins is {n}")
        return Strategy(scenario, self.itineraries)

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "coin_kind": self.coin_kind.value,
            "scenario": dict(self.scenario),
            "num_coins": self.num_coins,
            "weighings": self.weighings,
            "itineraries": list(self.itineraries),
            "provenance": self.provenance,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def parse_document(text: str) -> StrategyDocument:
    """Parse and validate a strategy document; every problem surfaces as DocumentError."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    missing = {"version", "coin_kind", "scenario", "num_coins", "weighings", "itineraries"} - raw.keys()
    if missing:
        raise DocumentError(f"missing keys: {', '.join(sorted(missing))}")
    if raw["version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {raw['version']!r}")
    try:
        doc = StrategyDocument(
            coin_kind=parse_kind(raw["coin_kind"]),
            scenario=dict(raw["scenario"]),
            num_coins=int(raw["num_coins"]),
            weighings=int(raw["weighings"]),
            itineraries=tuple(raw["itineraries"]),
            provenance=str(raw.get("provenance", "")),
        )
        strategy = doc.to_strategy()
    except DocumentError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise DocumentError(f"invalid document: {exc}") from None
    if len(doc.itineraries) != doc.num_coins:
        raise DocumentError(f"{len(doc.itineraries)} itineraries for {doc.num_coins} coins")
    if doc.num_coins and strategy.weighings != doc.weighings:
        raise DocumentError(f"itineraries have {strategy.weighings} weighings, document says {doc.weighings}")
    return doc


def load_document(path: str) -> StrategyDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
