import pytest

from weighwright.core import CoinKind, CoinState, Hypothesis, coin_outcome, conjugate_itinerary
from weighwright.errors import UnknownTableId
from weighwright.sequences import lr_unknown_oblivious
from weighwright.tables import (
    CORRECTIONS,
    LR7_ROWS,
    LR7_SINGLES,
    _raw,
    builtin_strategy,
    derive_lr_table,
    paired_itineraries,
    table_ids,
    table_info,
)
from weighwright.verifier import simulate, verify_decodable

LR_IDS = [f"lr-unknown-w{w}-{lr_unknown_oblivious(w)}c" for w in range(2, 8)]
LHR_IDS = ["lhr-unknown-w3-6c", "lhr-unknown-w3-5c", "lhr-unknown-w3-4c"]


def test_catalogue():
    assert sorted(table_ids()) == sorted(LR_IDS + LHR_IDS)
    info = table_info("lr-unknown-w7-82c")
    assert (info.weighings, info.num_coins, info.listed) == (7, 82, False)


@pytest.mark.parametrize("table_id", LR_IDS + LHR_IDS)
def test_builtin_verifies(table_id):
    s = builtin_strategy(table_id)
    info = table_info(table_id)
    assert s.num_coins == info.num_coins and s.weighings == info.weighings
    report = verify_decodable(s)
    assert report.legitimate and report.decodable, report.violations


def test_listed_rows():
    assert builtin_strategy("lhr-unknown-w3-6c").itineraries == ("LLL", "LRO", "ORR", "RLR", "ROL", "OOO")
    assert builtin_strategy("lr-unknown-w3-5c").itineraries == ("LLL", "LOL", "OOO", "ROR", "RRR")
    w6 = builtin_strategy("lr-unknown-w6-41c")
    assert len(w6.itineraries) == 41 and "OOOOOO" in w6.itineraries


def test_spot_rows():
    w3 = builtin_strategy("lhr-unknown-w3-6c")
    assert simulate(w3, Hypothesis(0, CoinState.HEAVY)) == ">=<"
    assert simulate(w3, Hypothesis(0, CoinState.LIGHT)) == "<>="
    w4 = builtin_strategy("lr-unknown-w4-11c")
    assert simulate(w4, Hypothesis(w4.itineraries.index("LOOL"), CoinState.REAL)) == "===<"


@pytest.mark.parametrize("table_id", ["lr-unknown-w4-11c", "lr-unknown-w5-20c", "lr-unknown-w6-41c"])
def test_listed_tables_collide_and_corrections_fix_them(table_id):
    listed = builtin_strategy(table_id, seedless=True)
    assert not verify_decodable(listed).decodable
    corrected = builtin_strategy(table_id)
    changed = [(a, b) for a, b in zip(listed.itineraries, corrected.itineraries) if a != b]
    assert dict(changed) == CORRECTIONS[table_id]
    for a, b in changed:
        # only the last letter flips, and the light outcome is untouched
        assert a[:-1] == b[:-1] and a[-1] != b[-1]


@pytest.mark.parametrize("table_id", LHR_IDS + ["lr-unknown-w2-3c", "lr-unknown-w3-5c"])
def test_seedless_uncorrected_tables_are_unchanged(table_id):
    assert builtin_strategy(table_id, seedless=True) == builtin_strategy(table_id)


def test_seedless_forbids_derived_table():
    with pytest.raises(UnknownTableId):
        builtin_strategy("lr-unknown-w7-82c", seedless=True)


def test_unknown_id():
    with pytest.raises(UnknownTableId):
        builtin_strategy("lr-unknown-w9-1c")


def _patterns(d):
    out = []
    for s in (CoinState.LIGHT, CoinState.REAL):
        x = coin_outcome(CoinKind.LR, s, d)
        out.append(tuple(i + 1 for i, c in enumerate(x) if c != "="))
    return tuple(out)


def _rows_of(itineraries):
    rows = {}
    for d in itineraries:
        light, real = _patterns(d)
        reals = rows.setdefault(light, [])
        if real not in reals:
            reals.append(real)
    return list(rows.items())


@pytest.mark.parametrize("table_id, w", [("lr-unknown-w4-11c", 4), ("lr-unknown-w6-41c", 6)])
def test_rule_reproduces_corrected_tables(table_id, w):
    table = _raw(table_id, seedless=False)
    assert sorted(derive_lr_table(w, _rows_of(table), ())) == sorted(table)


def test_w7_derivation():
    table = derive_lr_table(7, LR7_ROWS, LR7_SINGLES)
    assert len(table) == len(set(table)) == 82
    # the three odd singles balance each other without being conjugates
    assert sorted(table[:-4]) == sorted(conjugate_itinerary(d) for d in table[:-4])
    assert builtin_strategy("lr-unknown-w7-82c").itineraries == tuple(table)


def test_paired_itineraries():
    assert paired_itineraries(4, (1, 3), (2, 4)) == ["LLLL", "LLRR", "RRLL", "RRRR"]
    assert paired_itineraries(3, (1,), (2,)) == ["LLO", "RRO"]
    assert paired_itineraries(3, (1, 3), (2,)) == ["LLL", "RRR"]
    assert paired_itineraries(3, (1, 3), (2,), flip_last=True) == ["LLR", "RRL"]
    with pytest.raises(ValueError):
        paired_itineraries(3, (2,), (1,))


@pytest.mark.parametrize("table_id", LR_IDS)
def test_lr_tables_truncate_to_any_size(table_id):
    n_max = table_info(table_id).num_coins
    for n in range(n_max + 1):
        s = builtin_strategy(table_id, num_coins=n)
        assert s.num_coins == n
        report = verify_decodable(s)
        assert report.legitimate and report.decodable


def test_truncated_w4_keeps_all_off_itinerary():
    assert builtin_strategy("lr-unknown-w4-11c", num_coins=9).itineraries[-1] == "OOOO"
