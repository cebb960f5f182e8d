"""Adaptive strategies: a memoised minimax solver over coin-count states.

A state counts the suspect coins by what their fake-coin hypothesis says about
the current state (l, h, r: known light/heavy/real; u: unknown) plus the coins
already known to be genuine.  Coins inside one class are interchangeable, which
the test suite checks against an identity-tracking brute-force solver.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .core import (
    EQ,
    GT,
    LEFT,
    LT,
    OFF,
    RIGHT,
    CoinKind,
    CoinState,
    Strategy,
    step_state,
    weighing_symbol,
)
from .errors import InfeasibleChoice, SearchCeilingExceeded, UnknownExampleId
from .outcomes import count_outcomes
from .sequences import bound, BoundClass, lhr_counts
from .synthesis import lhr_mixed_genuine_needed, synth_lhr_mixed
from .verifier import decode

L, H, R = CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL
RESULTS = (EQ, LT, GT)
CLASS_ORDER = ("u", "l", "h", "r", "g")  # search order for weighing choices
_STATE_CLASS = {L: "l", H: "h", R: "r"}

DEFAULT_CEILING = (40, 5)
CEILING_ENV = "WEIGHWRIGHT_SEARCH_CEILING"


@dataclass(frozen=True)
class ScenarioCounts:
    """Coins by hypothesis class: l/h/r known light/heavy/real, u unknown, g genuine."""

    l: int = 0
    h: int = 0
    r: int = 0
    u: int = 0
    g: int = 0

    def __post_init__(self):
        if min(self.l, self.h, self.r, self.u, self.g) < 0:
            raise ValueError(f"negative coin count in {self}")

    @property
    def suspects(self) -> int:
        return self.l + self.h + self.r + self.u

    @property
    def total(self) -> int:
        return self.suspects + self.g

    def get(self, cls: str) -> int:
        return getattr(self, cls)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.l, self.h, self.r, self.u, self.g)

    def __str__(self) -> str:
        return f"{self.l}:{self.h}:{self.r}:{self.u}" + (f" +{self.g}g" if self.g else "")

    @classmethod
    def unknown(cls, n: int) -> "ScenarioCounts":
        return cls(u=n)


@dataclass(frozen=True)
class WeighingChoice:
    """Coins of each class placed on the left and on the right pan."""

    left: ScenarioCounts
    right: ScenarioCounts

    @property
    def pan_size(self) -> int:
        return self.left.total

    def mirrored(self) -> "WeighingChoice":
        return WeighingChoice(self.right, self.left)


def _check_kind_classes(kind: CoinKind, s: ScenarioCounts) -> None:
    if kind is CoinKind.LH and s.r:
        raise InfeasibleChoice("LH coins have no real state")
    if kind is CoinKind.LR and s.h:
        raise InfeasibleChoice("LR coins have no heavy state")


def _next_class(kind: CoinKind, state: CoinState) -> str:
    return _STATE_CLASS[step_state(kind, state, True)]


def transition(state: ScenarioCounts, choice: WeighingChoice, result: str, kind: CoinKind) -> ScenarioCounts:
    """Successor count state after ``choice`` is weighed and the scale shows ``result``."""
    a, b = choice.left, choice.right
    if a.total != b.total:
        raise InfeasibleChoice(f"pans hold {a.total} and {b.total} coins")
    for cls in CLASS_ORDER:
        if a.get(cls) + b.get(cls) > state.get(cls):
            raise InfeasibleChoice(f"{a.get(cls) + b.get(cls)} {cls}-coins weighed, only {state.get(cls)} available")
    _check_kind_classes(kind, state)
    has_real = R in kind.states
    has_heavy = H in kind.states
    out = {c: 0 for c in "lhrug"}
    if result == EQ:
        out["l"] += state.l - a.l - b.l
        out["h"] += state.h - a.h - b.h
        out["r"] += state.r - a.r - b.r
        out["u"] += state.u - a.u - b.u
        # only real-state hypotheses on the scale read '='; they advance one step
        if has_real:
            out[_next_class(kind, R)] += a.r + b.r + a.u + b.u
    elif result in (LT, GT):
        lighter, heavier = (a, b) if result == LT else (b, a)
        out[_next_class(kind, L)] += lighter.l + lighter.u
        if has_heavy:
            out[_next_class(kind, H)] += heavier.h + heavier.u
    else:
        raise ValueError(f"unknown scale result {result!r}")
    out["g"] = state.total - sum(out[c] for c in "lhru")
    return ScenarioCounts(**out)


# --- counting bound used for pruning ----------------------------------------

@functools.lru_cache(maxsize=None)
def _outcome_count(kind: CoinKind, states: frozenset, w: int) -> int:
    return count_outcomes(kind, tuple(sorted(states, key=lambda s: s.value)), w)


def outcome_capacity_ok(kind: CoinKind, s: ScenarioCounts, w: int) -> bool:
    """Necessary condition: every start-state subset has enough outcomes for its hypotheses.

    Distinct coins need distinct outcomes, and the hypotheses of one unknown coin
    produce distinct outcomes unless the coin is never weighed (at most one such coin).
    """
    if s.suspects <= 1:
        return True
    per_class = {L: s.l, H: s.h, R: s.r}
    states = kind.states
    for k in range(1, len(states) + 1):
        for subset in itertools.combinations(states, k):
            demand = sum(per_class[x] for x in subset) + s.u * k
            if s.u:
                demand -= k - 1
            if demand > _outcome_count(kind, frozenset(subset), w):
                return False
    return True


# --- choices -----------------------------------------------------------------

def _splits(avail: list[int], size: int, idx: int = 0) -> Iterator[tuple[int, ...]]:
    """Vectors over the classes, bounded by ``avail``, summing to ``size``."""
    if idx == len(avail):
        if size == 0:
            yield ()
        return
    for take in range(min(avail[idx], size), -1, -1):
        for rest in _splits(avail, size - take, idx + 1):
            yield (take,) + rest


def weighing_choices(kind: CoinKind, s: ScenarioCounts) -> Iterator[WeighingChoice]:
    """Non-empty legitimate weighings, one per mirror pair, largest pans first.

    Genuine coins go on one pan only (on both they would cancel).
    """
    avail = [s.get(c) for c in CLASS_ORDER]
    for size in range(s.total // 2, 0, -1):
        for left in _splits(avail, size):
            rest = [a - x for a, x in zip(avail, left)]
            if left[4]:
                rest[4] = 0
            for right in _splits(rest, size):
                if right > left:
                    continue
                if left[4] and right[4]:
                    continue
                lv = dict(zip(CLASS_ORDER, left))
                rv = dict(zip(CLASS_ORDER, right))
                yield WeighingChoice(ScenarioCounts(**lv), ScenarioCounts(**rv))


# --- solver --------------------------------------------------------------------

@dataclass
class CountLeaf:
    state: ScenarioCounts


@dataclass
class CountNode:
    state: ScenarioCounts
    weighings_left: int
    choice: WeighingChoice
    children: dict[str, Union["CountNode", CountLeaf]]


@dataclass
class Verdict:
    solvable: bool
    tree: Optional[Union[CountNode, CountLeaf]] = None

    def __bool__(self) -> bool:
        return self.solvable


def search_ceiling() -> tuple[int, int]:
    """(max suspect coins, max weighings), from the environment or the defaults."""
    raw = os.environ.get(CEILING_ENV)
    if not raw:
        return DEFAULT_CEILING
    parts = raw.split(":")
    try:
        coins = int(parts[0])
        w = int(parts[1]) if len(parts) > 1 else DEFAULT_CEILING[1]
    except (ValueError, IndexError):
        raise ValueError(f"{CEILING_ENV} must look like N or N:W, got {raw!r}") from None
    return coins, w


class _Solver:
    def __init__(self, kind: CoinKind, use_cache: bool = True):
        self.kind = kind
        self.memo: Optional[dict] = {} if use_cache else None

    @staticmethod
    def _key(s: ScenarioCounts, w: int):
        # genuine coins beyond the number of suspects can never all be useful
        return (s.l, s.h, s.r, s.u, min(s.g, s.suspects), w)

    def winning_choice(self, s: ScenarioCounts, w: int) -> Optional[WeighingChoice]:
        """A weighing after which every result is solvable in ``w - 1``, or None."""
        key = self._key(s, w)
        if self.memo is not None and key in self.memo:
            return self.memo[key]
        found = None
        for choice in weighing_choices(self.kind, s):
            children = [transition(s, choice, res, self.kind) for res in RESULTS]
            if not all(outcome_capacity_ok(self.kind, c, w - 1) for c in children):
                continue
            if all(self.solvable(c, w - 1) for c in children):
                found = choice
                break
        if self.memo is not None:
            self.memo[key] = found
        return found

    def solvable(self, s: ScenarioCounts, w: int) -> bool:
        if s.suspects <= 1:
            return True
        if w <= 0 or not outcome_capacity_ok(self.kind, s, w):
            return False
        return self.winning_choice(s, w) is not None

    def tree(self, s: ScenarioCounts, w: int) -> Union[CountNode, CountLeaf]:
        if s.suspects <= 1:
            return CountLeaf(s)
        choice = self.winning_choice(s, w)
        assert choice is not None
        children = {res: self.tree(transition(s, choice, res, self.kind), w - 1) for res in RESULTS}
        return CountNode(s, w, choice, children)


def solve_adaptive(
    kind: CoinKind, state: ScenarioCounts, w: int, use_cache: bool = True, check_ceiling: bool = True
) -> Verdict:
    """Decide whether ``state`` can be solved adaptively in ``w`` weighings; return a count tree if so."""
    if w < 0:
        raise ValueError("w must be non-negative")
    _check_kind_classes(kind, state)
    if check_ceiling:
        coins, max_w = search_ceiling()
        if state.suspects > coins or w > max_w:
            raise SearchCeilingExceeded(
                f"search ceiling is {coins} suspect coins and {max_w} weighings "
                f"(got {state.suspects} and {w}); set {CEILING_ENV}=N:W to raise it",
                ceiling=(coins, max_w),
            )
    solver = _Solver(kind, use_cache)
    if not solver.solvable(state, w):
        return Verdict(False)
    return Verdict(True, solver.tree(state, w))


# --- concrete trees and replay --------------------------------------------------

@dataclass
class Found:
    coin: Optional[int]  # None on branches no hypothesis reaches


@dataclass
class Weigh:
    left: tuple[int, ...]
    right: tuple[int, ...]
    children: dict[str, "Node"]


@dataclass
class Oblivious:
    """Hand the remaining weighings to a fixed strategy; ``coins[i]`` is the coin playing strategy coin i."""

    strategy: Strategy
    coins: tuple[int, ...]


Node = Union[Found, Weigh, Oblivious]


def _class_states(kind: CoinKind, cls: str) -> tuple[CoinState, ...]:
    return {"l": (L,), "h": (H,), "r": (R,), "u": kind.states, "g": ()}[cls]


def coin_class_after(kind: CoinKind, cls: str, letter: str, result: str) -> str:
    """Per-coin update of a hypothesis class, computed by simulating each of its states."""
    survivors = {
        step_state(kind, s, letter != OFF)
        for s in _class_states(kind, cls)
        if weighing_symbol(s, letter) == result
    }
    if not survivors:
        return "g"
    if len(survivors) == 1:
        return _STATE_CLASS[survivors.pop()]
    if survivors == set(kind.states):
        return "u"
    raise AssertionError(f"hypothesis set {survivors} is not a class")


def _counts_of(classes: dict[int, str]) -> ScenarioCounts:
    return ScenarioCounts(**{c: sum(1 for v in classes.values() if v == c) for c in "lhrug"})


def _advance(kind: CoinKind, classes: dict[int, str], left, right, result: str) -> dict[int, str]:
    ls, rs = set(left), set(right)
    return {
        c: coin_class_after(kind, cls, LEFT if c in ls else RIGHT if c in rs else OFF, result)
        for c, cls in classes.items()
    }


def concretize(kind: CoinKind, tree: Union[CountNode, CountLeaf], classes: dict[int, str]) -> Node:
    """Turn a count tree into weighings of named coins, taking coins of each class in index order."""
    counts = _counts_of(classes)
    if counts.as_tuple()[:4] != tree.state.as_tuple()[:4]:
        raise AssertionError(f"count tree expects {tree.state}, coins give {counts}")
    if isinstance(tree, CountLeaf):
        suspects = [c for c, cls in sorted(classes.items()) if cls != "g"]
        return Found(suspects[0] if suspects else None)
    pools = {cls: [c for c, v in sorted(classes.items()) if v == cls] for cls in "lhrug"}
    left, right = [], []
    for cls in CLASS_ORDER:
        pool = pools[cls]
        n_left, n_right = tree.choice.left.get(cls), tree.choice.right.get(cls)
        left += pool[:n_left]
        right += pool[n_left:n_left + n_right]
    children = {
        res: concretize(kind, sub, _advance(kind, classes, left, right, res))
        for res, sub in tree.children.items()
    }
    return Weigh(tuple(left), tuple(right), children)


def replay(kind: CoinKind, node: Node, fake: int, start: CoinState) -> tuple[Optional[int], int, str]:
    """Run the tree with ``fake`` starting in ``start``; return (named coin, weighings used, outcome)."""
    state, used, outcome = start, 0, ""
    while True:
        if isinstance(node, Found):
            return node.coin, used, outcome
        if isinstance(node, Weigh):
            letter = LEFT if fake in node.left else RIGHT if fake in node.right else OFF
            symbol = weighing_symbol(state, letter)
            state = step_state(kind, state, letter != OFF)
            outcome += symbol
            used += 1
            node = node.children[symbol]
            continue
        idx = node.coins.index(fake) if fake in node.coins else None
        part = ""
        for i in range(node.strategy.weighings):
            letter = node.strategy.itineraries[idx][i] if idx is not None else OFF
            part += weighing_symbol(state, letter)
            state = step_state(kind, state, letter != OFF)
        decoded = decode(node.strategy, part)
        return node.coins[decoded.coin_index], used + len(part), outcome + part


@dataclass
class ReplayReport:
    hypotheses: int
    max_weighings: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_tree(kind: CoinKind, node: Node, classes: dict[int, str], w: int) -> ReplayReport:
    """Replay every hypothesis allowed by ``classes``; each must be named within ``w`` weighings."""
    failures, worst, count = [], 0, 0
    for coin, cls in sorted(classes.items()):
        for s in _class_states(kind, cls):
            count += 1
            try:
                named, used, outcome = replay(kind, node, coin, s)
            except Exception as exc:  # a missing branch or undecodable outcome is a failure
                failures.append(f"coin {coin} {s.value}: {type(exc).__name__}: {exc}")
                continue
            worst = max(worst, used)
            if named != coin:
                failures.append(f"coin {coin} {s.value}: outcome {outcome} names coin {named}")
            if used > w:
                failures.append(f"coin {coin} {s.value}: needed {used} weighings")
    return ReplayReport(count, worst, failures)


# --- identity-tracking brute force ------------------------------------------------

@functools.lru_cache(maxsize=None)
def _pan_pairs(n: int) -> tuple[tuple[frozenset, frozenset], ...]:
    out = []
    coins = range(n)
    for k in range(1, n // 2 + 1):
        for left in itertools.combinations(coins, k):
            rest = [c for c in coins if c not in left]
            for right in itertools.combinations(rest, k):
                if left < right:  # one of each mirror pair
                    out.append((frozenset(left), frozenset(right)))
    return tuple(out)


def brute_force_solvable(kind: CoinKind, state: ScenarioCounts, w: int) -> bool:
    """Ground truth: search over weighings of individually named coins, tracking (coin, state) hypotheses."""
    classes = []
    for cls in ("l", "h", "r", "u", "g"):
        classes += [cls] * state.get(cls)
    hyps = frozenset((i, s) for i, cls in enumerate(classes) for s in _class_states(kind, cls))
    return _brute(kind, len(classes), hyps, w)


@functools.lru_cache(maxsize=None)
def _brute(kind: CoinKind, n: int, hyps: frozenset, w: int) -> bool:
    if len({c for c, _ in hyps}) <= 1:
        return True
    if w == 0:
        return False
    limit = 3 ** (w - 1)
    for left, right in _pan_pairs(n):
        parts: dict[str, set] = {EQ: set(), LT: set(), GT: set()}
        for c, s in hyps:
            letter = LEFT if c in left else RIGHT if c in right else OFF
            parts[weighing_symbol(s, letter)].add((c, step_state(kind, s, letter != OFF)))
        if any(len({c for c, _ in p}) > limit for p in parts.values()):
            continue
        if all(_brute(kind, n, frozenset(p), w - 1) for p in parts.values()):
            return True
    return False


# --- scripted strategies -------------------------------------------------------------

@dataclass
class ScriptedStrategy:
    example_id: str
    kind: CoinKind
    num_coins: int
    weighings: int
    tree: Node

    def verify(self) -> ReplayReport:
        return verify_tree(self.kind, self.tree, {c: "u" for c in range(self.num_coins)}, self.weighings)


def _auto(classes: dict[int, str], w: int) -> Node:
    """Finish an LHR sub-state: oblivious mixed-state strategy when no coin is unknown, else search."""
    kind = CoinKind.LHR
    counts = _counts_of(classes)
    if counts.suspects <= 1:
        suspects = [c for c, v in classes.items() if v != "g"]
        return Found(suspects[0] if suspects else None)
    if counts.u == 0:
        need = lhr_mixed_genuine_needed(counts.l, counts.h, counts.r, w)
        if need <= counts.g:
            strategy = synth_lhr_mixed(counts.l, counts.h, counts.r, w, extra_genuine=need)
            order = [c for cls in "lhr" for c in sorted(classes) if classes[c] == cls]
            genuine = [c for c in sorted(classes) if classes[c] == "g"][:need]
            return Oblivious(strategy, tuple(order + genuine))
    verdict = solve_adaptive(kind, counts, w, check_ceiling=False)
    if not verdict:
        raise AssertionError(f"sub-state {counts} is not solvable in {w} weighings")
    return concretize(kind, verdict.tree, classes)


def _weigh(classes: dict[int, str], left, right, w: int, branch) -> Weigh:
    children = {}
    for res in RESULTS:
        after = _advance(CoinKind.LHR, classes, left, right, res)
        children[res] = branch(res, after, w - 1)
    return Weigh(tuple(left), tuple(right), children)


def _script_16() -> ScriptedStrategy:
    coins = {c: "u" for c in range(16)}

    def third(res, classes, w):
        return _auto(classes, w)

    def second(res, classes, w):
        if res != EQ:
            return _auto(classes, w)  # five heavy coins
        # four l-coins and two u-coins left: (2l + 1u) against (2l + 1 genuine)
        ls = [c for c in sorted(classes) if classes[c] == "l"]
        us = [c for c in sorted(classes) if classes[c] == "u"]
        gs = [c for c in sorted(classes) if classes[c] == "g"]
        return _weigh(classes, ls[:2] + us[:1], ls[2:4] + gs[:1], w, third)

    def first(res, classes, w):
        if res != EQ:
            return _auto(classes, w)  # the 0:7:7 mixed state
        ls = [c for c in sorted(classes) if classes[c] == "l"]
        return _weigh(classes, ls[:5], ls[5:10], w, second)

    tree = _weigh(coins, list(range(7)), list(range(7, 14)), 4, first)
    return ScriptedStrategy("lhr-unknown-w4-16c", CoinKind.LHR, 16, 4, tree)


def _script_39() -> ScriptedStrategy:
    coins = {c: "u" for c in range(39)}

    def second(res, classes, w):
        return _auto(classes, w)  # 0:11:1 after an imbalance, 18:0:0:1 after a balance

    def first(res, classes, w):
        if res != EQ:
            return _auto(classes, w)  # the 0:18:18 mixed state
        ls = [c for c in sorted(classes) if classes[c] == "l"]
        us = [c for c in sorted(classes) if classes[c] == "u"]
        return _weigh(classes, ls[:10] + us[:1], ls[10:20] + us[1:2], w, second)

    tree = _weigh(coins, list(range(18)), list(range(18, 36)), 5, first)
    return ScriptedStrategy("lhr-unknown-w5-39c", CoinKind.LHR, 39, 5, tree)


SCRIPTED = {"lhr-unknown-w4-16c": _script_16, "lhr-unknown-w5-39c": _script_39}


def scripted_strategy(example_id: str) -> ScriptedStrategy:
    try:
        return SCRIPTED[example_id]()
    except KeyError:
        raise UnknownExampleId(f"unknown example {example_id!r}; known: {', '.join(SCRIPTED)}") from None


# --- impossibility checks ------------------------------------------------------------

@dataclass
class ImpossibilityCheck:
    description: str
    kind: CoinKind
    state: ScenarioCounts
    w: int
    solvable: bool

    @property
    def passed(self) -> bool:
        return not self.solvable


@dataclass
class ImpossibilityReport:
    w_max: int
    checks: list[ImpossibilityCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_impossibilities(w_max: int = 4) -> ImpossibilityReport:
    """Confirm by exhaustive search the unsolvable states that the counting arguments predict."""
    if not 0 <= w_max <= 4:
        raise ValueError("w_max must be between 0 and 4")
    checks = []

    def add(desc, kind, state, w):
        verdict = solve_adaptive(kind, state, w, check_ceiling=False)
        checks.append(ImpossibilityCheck(desc, kind, state, w, verdict.solvable))

    for w in range(0, w_max + 1):
        add("LH mixed 1:1", CoinKind.LH, ScenarioCounts(l=1, h=1), w)
    for w in range(1, min(w_max, 2) + 1):
        total = 3**w - 1
        for l in range(1, total, 2):
            add(f"LH mixed {l}:{total - l}, both odd, l + h = 3^{w} - 1", CoinKind.LH, ScenarioCounts(l=l, h=total - l), w)
    for w in range(1, min(w_max, 3) + 1):
        Lw = lhr_counts(w)[0]
        for u in range(1, 3):
            l = Lw + 2 - 2 * u  # l + 2u - 1 = L_w + 1
            if l >= 0:
                add(f"LHR {l}:0:0:{u} with l + 2u - 1 > L_{w}", CoinKind.LHR, ScenarioCounts(l=l, u=u), w)
    for w in range(0, w_max + 1):
        n = bound(CoinKind.LHR, BoundClass.UNKNOWN_ADAPTIVE, w) + 1
        add(f"LHR unknown, {n} coins", CoinKind.LHR, ScenarioCounts(u=n), w)
    return ImpossibilityReport(w_max, checks)
