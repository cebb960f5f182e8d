"""Oblivious strategy construction.

Coins are matched to outcomes in conjugate pairs, each outcome is translated to
an itinerary that realises it, and conjugate outcomes translate to conjugate
itineraries, so the resulting itinerary multiset balances the pans.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    EQ,
    ITINERARY_LETTERS,
    LEFT,
    LT,
    OFF,
    RIGHT,
    CoinKind,
    CoinState,
    Scenario,
    Strategy,
    check_outcome,
    coin_outcome,
    check_state,
    conjugate_itinerary,
    conjugate_outcome,
)
from .errors import (
    InequalityViolated,
    InsufficientGenuineCoins,
    InvalidOutcome,
    KnownImpossible,
    TooManyCoins,
    Unsolvable,
)
from .outcomes import XGroup, enumerate_outcomes, is_valid_outcome, xgroup_outcomes
from .sequences import BoundClass, bound, hr_lhr_counts, jacobsthal, lhr_counts

L, H, R = CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL


# --- outcome -> itinerary translation ---------------------------------------

def _pan(symbol: str, lighter: bool) -> str:
    """Pan holding a light (``lighter``) or heavy coin that produced ``symbol``."""
    return LEFT if (symbol == LT) == lighter else RIGHT


def _imbalance_parities(x: str) -> list[int]:
    """For each position, 1-based count of imbalances so far if it is an imbalance, else 0."""
    seen, out = 0, []
    for s in x:
        if s == EQ:
            out.append(0)
        else:
            seen += 1
            out.append(seen)
    return out


def lh_itinerary(x: str, start: CoinState = L) -> str:
    """Unique itinerary on which an LH coin starting in ``start`` produces ``x``."""
    check_outcome(x)
    check_state(CoinKind.LH, start)
    letters = []
    for s, n in zip(x, _imbalance_parities(x)):
        if n == 0:
            letters.append(OFF)
        else:
            lighter = (n % 2 == 1) == (start is L)
            letters.append(_pan(s, lighter))
    return "".join(letters)


def lr_itinerary(start: CoinState, x: str) -> str:
    """Itinerary on which an LR coin starting in ``start`` produces ``x``.

    A light coin that just tipped the scale stays on the same pan for the next
    balanced weighing, which turns it light again.  A real coin is placed on the
    pan of each coming imbalance one weighing early.
    """
    check_outcome(x)
    check_state(CoinKind.LR, start)
    if not is_valid_outcome(CoinKind.LR, start, x):
        raise InvalidOutcome(f"an LR coin starting {start.value} cannot produce {x}")
    letters = []
    for i, s in enumerate(x):
        if s != EQ:
            letters.append(_pan(s, True))
            continue
        neighbour = x[i - 1] if start is L and i > 0 else (x[i + 1] if start is R and i + 1 < len(x) else EQ)
        letters.append(OFF if neighbour == EQ else _pan(neighbour, True))
    return "".join(letters)


def lhr_itinerary(start: CoinState, x: str) -> str:
    """Itinerary on which an LHR coin starting in ``start`` produces ``x``.

    Light and heavy starts: a coin that has just turned real stays on its pan
    for the following balanced weighing.  Real start: the coin is put on the pan
    of each odd imbalance one weighing early.
    """
    check_outcome(x)
    if not is_valid_outcome(CoinKind.LHR, start, x):
        raise InvalidOutcome(f"an LHR coin starting {start.value} cannot produce {x}")
    parity = _imbalance_parities(x)
    # Imbalance number n is produced in the light phase iff n is odd (light/real start) or even (heavy start).
    light_phase = (lambda n: n % 2 == 0) if start is H else (lambda n: n % 2 == 1)
    letters = []
    for i, (s, n) in enumerate(zip(x, parity)):
        if n:
            letters.append(_pan(s, light_phase(n)))
        elif start is R:
            nxt = parity[i + 1] if i + 1 < len(x) else 0
            letters.append(_pan(x[i + 1], True) if nxt and light_phase(nxt) else OFF)
        else:
            prev = parity[i - 1] if i > 0 else 0
            # the previous imbalance came from the heavy phase: same pan again
            letters.append(_pan(x[i - 1], False) if prev and not light_phase(prev) else OFF)
    return "".join(letters)


def translate(kind: CoinKind, start: CoinState, x: str) -> str:
    """Outcome-to-itinerary translation for any coin kind."""
    if kind is CoinKind.LH:
        return lh_itinerary(x, start)
    if kind is CoinKind.LR:
        return lr_itinerary(start, x)
    return lhr_itinerary(start, x)


# --- outcome assignment ------------------------------------------------------

def conjugate_pairs(outcomes: list[str]) -> list[tuple[str, str]]:
    """Non-self-conjugate outcomes grouped as (x, conj x), in order of first appearance."""
    present = set(outcomes)
    pairs, seen = [], set()
    for x in outcomes:
        c = conjugate_outcome(x)
        if x == c or x in seen:
            continue
        if c not in present:
            raise ValueError(f"outcome set is not closed under conjugation: {x} without {c}")
        seen.update((x, c))
        pairs.append((x, c))
    return pairs


@dataclass(frozen=True)
class Assignment:
    """Start-state class and outcome for each coin index."""

    pairs: dict[int, tuple[CoinState, str]]

    def check(self) -> None:
        by_class: dict[CoinState, set[str]] = {}
        for state, x in self.pairs.values():
            bucket = by_class.setdefault(state, set())
            if x in bucket:
                raise ValueError(f"outcome {x} assigned twice within the {state.value} class")
            bucket.add(x)


def _pair_assignment(outcomes: list[str], n: int) -> list[str]:
    """Outcomes for ``n`` coins: the all-= outcome first when n is odd, then conjugate pairs."""
    pairs = conjugate_pairs(outcomes)
    chosen = []
    if n % 2:
        chosen.append(EQ * len(outcomes[0]) if outcomes else "")
    for x, c in pairs[: n // 2]:
        chosen += [x, c]
    return chosen


def synth_known(kind: CoinKind, start: CoinState, num_coins: int, w: int) -> Strategy:
    """Oblivious strategy for a fake coin whose start state is known."""
    check_state(kind, start)
    if num_coins < 0 or w < 0:
        raise ValueError("num_coins and w must be non-negative")
    cap = bound(kind, BoundClass.known(start), w)
    if num_coins > cap:
        raise TooManyCoins(
            f"{num_coins} coins exceed the {cap} outcomes available to a {kind.name} coin "
            f"starting {start.value} in {w} weighings"
        )
    outcomes = enumerate_outcomes(kind, start, w)
    chosen = _pair_assignment(outcomes, num_coins)
    itineraries = [translate(kind, start, x) for x in chosen]
    return Strategy(Scenario.known_uniform(kind, start, num_coins), itineraries)


def known_assignment(kind: CoinKind, start: CoinState, num_coins: int, w: int) -> Assignment:
    outcomes = enumerate_outcomes(kind, start, w)
    chosen = _pair_assignment(outcomes, num_coins)
    return Assignment({i: (start, x) for i, x in enumerate(chosen)})


# --- LH mixed ----------------------------------------------------------------

def _itinerary_pairs(w: int) -> list[tuple[str, str]]:
    pairs, seen = [], set()
    for letters in itertools.product(ITINERARY_LETTERS, repeat=w):
        d = "".join(letters)
        c = conjugate_itinerary(d)
        if d == c or d in seen:
            continue
        seen.update((d, c))
        pairs.append((d, c))
    return pairs


def synth_lh_mixed(l: int, h: int, w: int) -> Strategy:
    """Oblivious strategy for the LH coin in the mixed ``l:h`` state.

    Coins are laid out as the light block followed by the heavy block.
    """
    if min(l, h, w) < 0:
        raise ValueError("counts and w must be non-negative")
    if l == 1 and h == 1:
        raise Unsolvable("the 1:1 state is unsolvable with an LH coin", reason="1:1")
    if l + h > 3**w:
        raise TooManyCoins(f"{l + h} coins exceed the 3^{w} = {3**w} available outcomes")
    if l % 2 and h % 2 and l + h == 3**w - 1:
        raise Unsolvable(
            f"l and h both odd with l + h = 3^{w} - 1: outside the conjugate-pairing construction",
            reason="parity",
        )

    pool = _itinerary_pairs(w)
    light: list[str] = []
    heavy: list[str] = []
    if l % 2 and h % 2:
        pad = OFF * (w - 2)
        seed_single = LEFT + OFF + pad
        seed_triple = [LEFT + OFF + pad, RIGHT + LEFT + pad, RIGHT + RIGHT + pad]
        if h >= 3:
            light.append(seed_single)
            heavy += seed_triple
        else:
            heavy.append(seed_single)
            light += seed_triple
        used = set(light + heavy)
        used |= {conjugate_itinerary(d) for d in used}
        pool = [p for p in pool if p[0] not in used]
    else:
        if l % 2:
            light.append(OFF * w)
        elif h % 2:
            heavy.append(OFF * w)
    it = iter(pool)
    for group, target in ((light, l), (heavy, h)):
        while len(group) < target:
            group.extend(next(it))
    return Strategy(Scenario.mixed_blocks(CoinKind.LH, l=l, h=h), light + heavy)


# --- LR mixed ----------------------------------------------------------------

def synth_lr_mixed(l: int, r: int, w: int) -> Strategy:
    """Oblivious strategy for the LR coin in the mixed ``l:r`` state (light block, then real block)."""
    if min(l, r, w) < 0:
        raise ValueError("counts and w must be non-negative")
    if r > jacobsthal(w + 1) or l + r > jacobsthal(w + 2):
        raise TooManyCoins(
            f"{l}:{r} needs r <= J_{w + 1} = {jacobsthal(w + 1)} and l + r <= J_{w + 2} = {jacobsthal(w + 2)}"
        )
    real_set = enumerate_outcomes(CoinKind.LR, R, w)
    real_only = set(real_set)
    light_rest = [x for x in enumerate_outcomes(CoinKind.LR, L, w) if x not in real_only]
    all_eq = EQ * w

    real_pairs = conjugate_pairs(real_set)
    light_pairs = conjugate_pairs(light_rest)

    light_coins: list[tuple[str, str]] = []  # (outcome, itinerary)
    real_coins: list[tuple[str, str]] = []
    odd_odd = l % 2 == 1 and r % 2 == 1
    if odd_odd:
        # The spare real coin sits once on the right pan and still reads all '='; the spare
        # light coin tips the first weighing from the left pan.  Their itineraries cancel.
        spare_light = LT + EQ * (w - 1)
        real_coins.append((all_eq, RIGHT + OFF * (w - 1)))
        light_coins.append((spare_light, LEFT + OFF * (w - 1)))
        banned = {spare_light, conjugate_outcome(spare_light)}
        light_pairs = [p for p in light_pairs if p[0] not in banned]
    elif r % 2:
        real_coins.append((all_eq, OFF * w))
    elif l % 2:
        light_coins.append((all_eq, OFF * w))

    r_pairs_needed = r // 2
    for x, c in real_pairs[:r_pairs_needed]:
        real_coins += [(x, lr_itinerary(R, x)), (c, lr_itinerary(R, c))]
    leftover = light_pairs + real_pairs[r_pairs_needed:]
    for x, c in leftover[: l // 2]:
        light_coins += [(x, lr_itinerary(L, x)), (c, lr_itinerary(L, c))]
    itineraries = [d for _, d in light_coins] + [d for _, d in real_coins]
    return Strategy(Scenario.mixed_blocks(CoinKind.LR, l=l, r=r), itineraries)


# --- LHR mixed ---------------------------------------------------------------

_TYPES = (L, H, R)
_TYPE_GROUPS = {
    H: (XGroup.HX, XGroup.LHX, XGroup.LHRX),
    R: (XGroup.LRX, XGroup.LHRX),
    L: (XGroup.LX, XGroup.LHX, XGroup.LRX, XGroup.LHRX),
}
# h-coins have the fewest groups and r-coins share only LRX and LHRX with l-coins,
# so filling in this order, most exclusive group first, never strands a later type.
_PLACEMENT_ORDER = (H, R, L)


def lhr_inequalities(l: int, h: int, r: int, w: int) -> list[str]:
    """The mixed-state counting inequalities that fail for ``l:h:r`` in ``w`` weighings."""
    Lw, Hw, Rw = lhr_counts(w)
    HRw, LHRw = hr_lhr_counts(w)
    checks = [
        ("l <= L_w", l, Lw),
        ("r <= R_w", r, Rw),
        ("h <= H_w", h, Hw),
        ("l + h <= LH_w", l + h, LHRw),  # LH_w = LHR_w
        ("h + r <= HR_w", h + r, HRw),
        ("l + r <= LR_w", l + r, Lw),  # LR_w = L_w
        ("l + h + r <= LHR_w", l + h + r, LHRw),
    ]
    return [f"{name} ({value} > {cap})" for name, value, cap in checks if value > cap]


@dataclass(frozen=True)
class LhrCoin:
    state: CoinState
    outcome: str
    itinerary: str


def _pair_key(x: str) -> str:
    return min(x, conjugate_outcome(x))


def _place_pairs(
    free: dict[XGroup, list[tuple[str, str]]], need: dict[CoinState, int]
) -> Optional[dict[CoinState, list[tuple[str, str]]]]:
    free = {g: list(v) for g, v in free.items()}
    placed: dict[CoinState, list[tuple[str, str]]] = {t: [] for t in _TYPES}
    for t in _PLACEMENT_ORDER:
        want = need[t]
        for g in _TYPE_GROUPS[t]:
            take, free[g] = free[g][:want], free[g][want:]
            placed[t] += take
            want -= len(take)
        if want:
            return None
    return placed


def _extra_itineraries(w: int) -> list[str]:
    """Itineraries tried for an unpaired coin: all of them for short strategies, else at most two on-scale letters."""
    every = ("".join(p) for p in itertools.product(ITINERARY_LETTERS, repeat=w))
    cands = [d for d in every if w <= 3 or len(d) - d.count(OFF) <= 2]
    return sorted(cands, key=lambda d: (len(d) - d.count(OFF), d))


def _imbalance(itineraries, w: int) -> list[int]:
    d = [0] * w
    for it in itineraries:
        for i, letter in enumerate(it):
            if letter == LEFT:
                d[i] += 1
            elif letter == RIGHT:
                d[i] -= 1
    return d


def _flexible_real(d: list[int], w: int) -> tuple[str, int]:
    """Best itinerary for a real-start coin reading all '=': off the scale, or on a pan exactly once."""
    best_it, best = OFF * w, max((abs(v) for v in d), default=0)
    for i in range(w):
        for letter, delta in ((LEFT, 1), (RIGHT, -1)):
            trial = list(d)
            trial[i] += delta
            need = max(abs(v) for v in trial)
            if need < best:
                best_it, best = OFF * i + letter + OFF * (w - i - 1), need
    return best_it, best


def lhr_mixed_plan(l: int, h: int, r: int, w: int) -> tuple[list[LhrCoin], int]:
    """Coins for ``l:h:r`` in ``w`` weighings and the number of genuine coins needed to balance them.

    Coins of one type are matched to conjugate outcome pairs, which balance.
    When a type has an odd count, one coin of it is left over; one such coin may
    take the all-'=' outcome and the others take outcomes (with any itinerary
    producing them) chosen to keep the pan imbalance, which genuine coins must
    cover, as small as possible.
    """
    if min(l, h, r, w) < 0:
        raise ValueError("counts and w must be non-negative")
    failed = lhr_inequalities(l, h, r, w)
    if failed:
        raise InequalityViolated("; ".join(failed))
    counts = {L: l, H: h, R: r}
    need = {t: counts[t] // 2 for t in _TYPES}
    odd = [t for t in (R, L, H) if counts[t] % 2]
    all_eq = EQ * w
    group_pairs = {g: conjugate_pairs(v) for g, v in xgroup_outcomes(w).items()}
    itins = _extra_itineraries(w)

    best: Optional[tuple[list[LhrCoin], int]] = None
    for holder in [*odd, None]:
        rest = [t for t in odd if t != holder]
        options = [
            [(d, x) for d in itins if (x := coin_outcome(CoinKind.LHR, t, d)) != all_eq] for t in rest
        ]
        scored = []
        for combo in itertools.product(*options):
            outs = [x for _, x in combo]
            if len(set(outs)) < len(outs):
                continue
            d = _imbalance([it for it, _ in combo], w)
            if holder is R:
                hold_it, score = _flexible_real(d, w)
            else:
                hold_it, score = OFF * w, max((abs(v) for v in d), default=0)
            scored.append((score, combo, hold_it))
        scored.sort(key=lambda s: s[0])
        for score, combo, hold_it in scored:
            if best is not None and score >= best[1]:
                break
            used = {_pair_key(x) for _, x in combo}
            free = {g: [p for p in ps if p[0] not in used] for g, ps in group_pairs.items()}
            placed = _place_pairs(free, need)
            if placed is None:
                continue
            coins = [LhrCoin(t, x, it) for t, (it, x) in zip(rest, combo)]
            if holder is not None:
                coins.append(LhrCoin(holder, all_eq, hold_it))
            for t in _TYPES:
                for x, c in placed[t]:
                    coins.append(LhrCoin(t, x, lhr_itinerary(t, x)))
                    coins.append(LhrCoin(t, c, lhr_itinerary(t, c)))
            best = (coins, score)
            break
        if best is not None and best[1] == 0:
            break
    if best is None:
        raise InequalityViolated(f"no outcome assignment found for {l}:{h}:{r} in {w} weighings")
    return best


def lhr_mixed_genuine_needed(l: int, h: int, r: int, w: int) -> int:
    return lhr_mixed_plan(l, h, r, w)[1]


def synth_lhr_mixed(l: int, h: int, r: int, w: int, extra_genuine: int = 0) -> Strategy:
    """Oblivious strategy for the LHR coin in the mixed ``l:h:r`` state.

    ``extra_genuine`` coins known to be genuine serve as ballast.  The strategy
    covers ``l + h + r + extra_genuine`` coins laid out as light, heavy, real
    and genuine blocks.
    """
    coins, needed = lhr_mixed_plan(l, h, r, w)
    if needed > extra_genuine:
        if (l, h, r, w) == (7, 1, 1, 2):
            raise KnownImpossible(
                "7:1:1 has an adaptive strategy in 2 weighings but no oblivious one without genuine coins",
                reason="7:1:1",
            )
        raise InsufficientGenuineCoins(
            f"{l}:{h}:{r} in {w} weighings needs {needed} extra genuine coin(s), {extra_genuine} given",
            needed=needed,
            available=extra_genuine,
        )
    d = _imbalance([c.itinerary for c in coins], w)
    genuine = [
        "".join(RIGHT if v > j else (LEFT if -v > j else OFF) for v in d) for j in range(extra_genuine)
    ]
    ordered = [c for t in (L, H, R) for c in coins if c.state is t]
    itineraries = [c.itinerary for c in ordered] + genuine
    return Strategy(
        Scenario.mixed_blocks(CoinKind.LHR, l=l, h=h, r=r, genuine=extra_genuine), itineraries
    )
