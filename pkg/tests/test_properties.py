from hypothesis import given, settings
from hypothesis import strategies as st

from weighwright.core import CoinKind, CoinState, coin_outcome, conjugate_itinerary, conjugate_outcome
from weighwright.outcomes import enumerate_outcomes
from weighwright.sequences import hr_lhr_counts, jacobsthal
from weighwright.synthesis import (
    lhr_inequalities,
    lhr_mixed_genuine_needed,
    synth_known,
    synth_lh_mixed,
    synth_lhr_mixed,
    synth_lr_mixed,
    translate,
)
from weighwright.verifier import check_legitimate, verify_decodable

outcomes = st.text(alphabet="=<>", max_size=12)
itineraries = st.text(alphabet="LRO", max_size=12)
kind_state = st.sampled_from([(k, s) for k in CoinKind for s in k.states])


@given(outcomes)
def test_outcome_conjugation_is_involution(x):
    assert conjugate_outcome(conjugate_outcome(x)) == x
    assert (conjugate_outcome(x) == x) == (set(x) <= {"="})


@given(itineraries)
def test_itinerary_conjugation_is_involution(d):
    assert conjugate_itinerary(conjugate_itinerary(d)) == d
    assert (conjugate_itinerary(d) == d) == (set(d) <= {"O"})


@given(kind_state, itineraries)
def test_conjugate_itinerary_gives_conjugate_outcome(ks, d):
    kind, s = ks
    assert coin_outcome(kind, s, conjugate_itinerary(d)) == conjugate_outcome(coin_outcome(kind, s, d))


@given(kind_state, itineraries)
def test_outcome_symbol_depends_on_prefix_only(ks, d):
    kind, s = ks
    full = coin_outcome(kind, s, d)
    for k in range(len(d)):
        assert coin_outcome(kind, s, d[:k]) == full[:k]


@settings(max_examples=60, deadline=None)
@given(kind_state, st.integers(0, 5), st.data())
def test_translate_roundtrip_and_conjugation(ks, w, data):
    kind, s = ks
    valid = enumerate_outcomes(kind, s, w)
    x = data.draw(st.sampled_from(valid))
    d = translate(kind, s, x)
    assert coin_outcome(kind, s, d) == x
    assert translate(kind, s, conjugate_outcome(x)) == conjugate_itinerary(d)


def _ok(strategy):
    assert check_legitimate(strategy)
    report = verify_decodable(strategy)
    assert report.decodable, report.violations


@settings(max_examples=40, deadline=None)
@given(kind_state, st.integers(0, 4), st.data())
def test_synth_known_valid_below_bound(ks, w, data):
    kind, s = ks
    n_max = len(enumerate_outcomes(kind, s, w))
    _ok(synth_known(kind, s, data.draw(st.integers(0, n_max)), w))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_synth_lh_mixed_valid(w, data):
    l = data.draw(st.integers(0, 3**w))
    h = data.draw(st.integers(0, 3**w - l))
    if (l, h) == (1, 1) or (l % 2 and h % 2 and l + h == 3**w - 1):
        return
    _ok(synth_lh_mixed(l, h, w))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_synth_lr_mixed_valid(w, data):
    r = data.draw(st.integers(0, jacobsthal(w + 1)))
    l = data.draw(st.integers(0, jacobsthal(w + 2) - r))
    _ok(synth_lr_mixed(l, r, w))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_synth_lhr_mixed_valid(w, data):
    top = hr_lhr_counts(w)[1]
    l, h, r = (data.draw(st.integers(0, top)) for _ in range(3))
    if lhr_inequalities(l, h, r, w) or (l, h, r, w) == (7, 1, 1, 2):
        return
    need = lhr_mixed_genuine_needed(l, h, r, w)
    assert need <= max(sum(c % 2 for c in (l, h, r)) - 1, 0)
    _ok(synth_lhr_mixed(l, h, r, w, extra_genuine=need))
