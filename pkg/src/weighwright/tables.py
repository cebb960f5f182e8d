"""Catalogued oblivious strategies for fake coins in an unknown state.

The LR tables for four to six weighings are stored as listed and then
corrected: in rows where one light pattern meets two real patterns, the listed
itineraries give two coins the same light outcome.  Flipping the last letter of
the second itinerary family removes the clash while keeping the pans balanced.
The seven-weighing table is derived from its pattern rows by the same rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import LEFT, OFF, RIGHT, CoinKind, Scenario, Strategy, conjugate_itinerary
from .errors import UnknownTableId

_FLIP = {LEFT: RIGHT, RIGHT: LEFT}


def paired_itineraries(w: int, light: tuple[int, ...], real: tuple[int, ...], flip_last: bool = False) -> list[str]:
    """Itineraries whose light-start and real-start imbalances fall on the given 1-based positions.

    On-scale positions are taken in consecutive pairs carrying one letter.  An
    unpaired last position repeats the previous letter, or flips it when
    ``flip_last`` is set.
    """
    on = sorted(light + real)
    if tuple(on[0::2]) != tuple(sorted(light)) or tuple(on[1::2]) != tuple(sorted(real)):
        raise ValueError(f"light {light} and real {real} positions do not interleave")
    pairs = [on[i:i + 2] for i in range(0, len(on) - len(on) % 2, 2)]
    out = []
    for letters in itertools.product((LEFT, RIGHT), repeat=len(pairs)):
        d = [OFF] * w
        for pair, letter in zip(pairs, letters):
            for p in pair:
                d[p - 1] = letter
        if len(on) % 2:
            last = letters[-1] if letters else LEFT
            d[on[-1] - 1] = _FLIP[last] if flip_last else last
        out.append("".join(d))
    return out


def derive_lr_table(w: int, rows, singles: tuple[str, ...]) -> list[str]:
    """Expand ``(light positions, [real positions, ...])`` rows, then append the single itineraries."""
    out: list[str] = []
    for light, reals in rows:
        for k, real in enumerate(reals):
            out += paired_itineraries(w, light, real, flip_last=k > 0)
    return out + list(singles)


LR7_ROWS = (
    ((1, 3, 5, 7), [(2, 4, 6)]),
    ((1, 3, 5), [(2, 4, 7)]),
    ((1, 3, 6), [(2, 5, 7)]),
    ((1, 4, 6), [(3, 5, 7)]),
    ((1, 3, 7), [(2, 6), (2, 4)]),
    ((1, 4, 7), [(3, 5), (2, 5)]),
    ((1, 5, 7), [(4, 6), (3, 6)]),
    ((1, 3), [(2, 7)]),
    ((1, 4), [(3, 7)]),
    ((1, 5), [(4, 7)]),
    ((1, 6), [(5, 7)]),
    ((1, 7), [(2,), (6,)]),
    ((1,), [(7,)]),
)
LR7_SINGLES = ("OOLLOOO", "OOORROO", "OOROLOO", "OOOOOOO")

_LISTED = {
    "lr-unknown-w2-3c": (CoinKind.LR, "LL OO RR"),
    "lr-unknown-w3-5c": (CoinKind.LR, "LLL LOL OOO ROR RRR"),
    "lr-unknown-w4-11c": (CoinKind.LR, "LLLL LLRR RRLL RRRR LOLL RORR LLOL RROR LOOL ROOR OOOO"),
    "lr-unknown-w5-20c": (
        CoinKind.LR,
        "LLLLL LLRRR RRLLL RRRRR LLLOL LLROR RRLOL RRROR LOLLL LOLRR RORLL RORRR "
        "LLOOL RROOR LOOLL ROORR LOLOO ROOOL OOROR OOOOO",
    ),
    "lr-unknown-w6-41c": (
        CoinKind.LR,
        "LLLLLL LLLLRR LLRRLL LLRRRR RRLLLL RRLLRR RRRRLL RRRRRR "
        "LLLLOL LLRROR RRLLOL RRRROR LLLOLL LLRORR RRLOLL RRRORR "
        "LOLLLL LOLRRR RORLLL RORRRR LLLOOL LLROOR RRLOOL RRROOR "
        "LOOLLL LOOLRR ROORLL ROORRR LOLLOL LOLROR RORLOL RORROR "
        "LLOOOL RROOOR LOOOLL ROOORR LOLOOO ROROOO OOOLOL OOOROR OOOOOO",
    ),
    "lhr-unknown-w3-6c": (CoinKind.LHR, "LLL LRO ORR RLR ROL OOO"),
    "lhr-unknown-w3-5c": (CoinKind.LHR, "LLL LRO ORR RLR ROL"),
    "lhr-unknown-w3-4c": (CoinKind.LHR, "LLL LRR RLR RRL"),
}

# listed itinerary -> corrected itinerary
CORRECTIONS = {
    "lr-unknown-w4-11c": {"LLOL": "LLOR", "RROR": "RROL"},
    "lr-unknown-w5-20c": {"LOOLL": "LOOLR", "ROORR": "ROORL"},
    "lr-unknown-w6-41c": {
        "LLLOLL": "LLLOLR",
        "LLRORR": "LLRORL",
        "RRLOLL": "RRLOLR",
        "RRRORR": "RRRORL",
        "LOOOLL": "LOOOLR",
        "ROOORR": "ROOORL",
    },
}


@dataclass(frozen=True)
class TableInfo:
    table_id: str
    kind: CoinKind
    weighings: int
    num_coins: int
    listed: bool  # False when only derived, with no stored itinerary list


def _derived_ids() -> dict[str, CoinKind]:
    return {"lr-unknown-w7-82c": CoinKind.LR}


def table_ids() -> list[str]:
    return list(_LISTED) + list(_derived_ids())


def table_info(table_id: str) -> TableInfo:
    d = _raw(table_id, seedless=False)
    kind = _LISTED[table_id][0] if table_id in _LISTED else _derived_ids()[table_id]
    return TableInfo(table_id, kind, len(d[0]), len(d), table_id in _LISTED)


def _raw(table_id: str, seedless: bool) -> list[str]:
    if table_id in _LISTED:
        rows = _LISTED[table_id][1].split()
        if seedless:
            return rows
        fix = CORRECTIONS.get(table_id, {})
        return [fix.get(d, d) for d in rows]
    if table_id == "lr-unknown-w7-82c":
        if seedless:
            raise UnknownTableId(f"{table_id} has no stored itinerary list; it is derived from its pattern rows")
        return derive_lr_table(7, LR7_ROWS, LR7_SINGLES)
    raise UnknownTableId(f"unknown table id {table_id!r}; known: {', '.join(table_ids())}")


def _balanced_blocks(itineraries: list[str]) -> list[list[str]]:
    """Split a balanced table into conjugate pairs, self-conjugate itineraries and one leftover block."""
    blocks, seen = [], set()
    for d in itineraries:
        c = conjugate_itinerary(d)
        if d in seen:
            continue
        if d == c:
            blocks.append([d])
            seen.add(d)
        elif c in itineraries:
            blocks.append([d, c])
            seen.update((d, c))
    rest = [d for d in itineraries if d not in seen]
    if rest:
        blocks.append(rest)
    return blocks


def _truncate(itineraries: list[str], num_coins: int) -> list[str]:
    """Balanced blocks, earliest first, whose sizes add up to ``num_coins``."""
    blocks = _balanced_blocks(itineraries)
    # reachable[k] = block indices used to reach k coins
    reachable: dict[int, tuple[int, ...]] = {0: ()}
    for i, block in enumerate(blocks):
        for total, used in list(reachable.items()):
            reachable.setdefault(total + len(block), used + (i,))
    if num_coins not in reachable:
        raise ValueError(f"no balanced sub-table of {num_coins} coins (table has {len(itineraries)})")
    chosen = {d for i in reachable[num_coins] for d in blocks[i]}
    return [d for d in itineraries if d in chosen]


def builtin_strategy(table_id: str, num_coins: Optional[int] = None, seedless: bool = False) -> Strategy:
    """Catalogued unknown-state strategy, optionally cut down to ``num_coins`` coins.

    With ``seedless`` the itineraries are returned exactly as listed, without
    corrections, and derived-only tables are unavailable.
    """
    itineraries = _raw(table_id, seedless)
    kind = _LISTED[table_id][0] if table_id in _LISTED else _derived_ids()[table_id]
    if num_coins is not None and num_coins != len(itineraries):
        itineraries = _truncate(itineraries, num_coins)
    return Strategy(Scenario.unknown(kind, len(itineraries)), itineraries)
