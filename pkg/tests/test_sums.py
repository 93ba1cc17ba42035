import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ordcalc import parse_ordinal as P
from ordcalc.core import OMEGA, ZERO, atom, monomial, nat_add, ord_add, ord_mul, ordinal
from ordcalc.sequence import (
    Explicit,
    Position,
    Repeat,
    SeqDesc,
    StepSet,
    nonzero_subsequence,
    sample_points,
    seq_length,
)
from ordcalc.sums import (
    g_sum,
    g_sum_spectrum,
    iter_nat_sum,
    iter_ord_sum,
    partial_nat_sum,
    range_g_sum,
    range_nat_sum,
    tail_character,
)
from ordcalc.checks import brute_force_spectrum

from strategies import ordinals, sequences

W1 = atom(1)


@pytest.mark.parametrize(
    "segs, expected",
    [
        ([Repeat(1, OMEGA)], "w"),
        ([Explicit([0]), Repeat(1, OMEGA), Explicit([1])], "w+1"),
        ([Repeat(P("w+1"), OMEGA)], "w^2"),
        ([Repeat(1, W1), Repeat(W1, OMEGA)], "w1*w"),
        ([Repeat(W1, OMEGA), Repeat(1, W1)], "w1*(w+1)"),
        ([Repeat(0, P("w^2"))], "0"),
        ([Repeat(P("w^2+3"), P("w^2*2 + w + 2"))], "w^4*2 + w^3 + w^2*2 + 6"),
    ],
)
def test_iter_nat_sum(segs, expected):
    assert iter_nat_sum(SeqDesc(segs)) == P(expected)


@pytest.mark.parametrize(
    "segs, expected",
    [
        ([Explicit([1]), Repeat(1, OMEGA)], "w"),
        ([Repeat(1, OMEGA)], "w"),
        ([Repeat(P("w+1"), OMEGA)], "w^2"),
    ],
)
def test_iter_ord_sum(segs, expected):
    assert iter_ord_sum(SeqDesc(segs)) == P(expected)


def test_repeat_limit_matches_finite_partial_sums():
    # partial sums of Repeat(w+1, w) at n steps are w*n + n, all below w^2
    a = P("w+1")
    acc = ZERO
    for n in range(1, 30):
        acc = nat_add(acc, a)
        assert acc == P(f"w*{n} + {n}")
        assert acc < iter_nat_sum(SeqDesc([Repeat(a, OMEGA)]))


def test_partial_and_range():
    assert partial_nat_sum(SeqDesc([Repeat(1, OMEGA)]), 3) == ordinal(3)
    count = SeqDesc([Repeat(1, W1), Repeat(W1, OMEGA)])
    assert partial_nat_sum(count, W1) == W1
    assert partial_nat_sum(count, 0) == ZERO
    s = SeqDesc([Explicit([0]), Repeat(1, OMEGA), Explicit([1])])
    # the Repeat occupies [1, w); position w holds the final 1
    assert range_nat_sum(s, 1, OMEGA) == OMEGA
    assert range_nat_sum(s, 1, P("w+1")) == P("w+1")
    assert range_nat_sum(s, 2, 2) == ZERO
    assert range_nat_sum(count, W1, ord_add(W1, OMEGA)) == ord_mul(W1, OMEGA)


def test_g_sum_examples():
    s = SeqDesc([Explicit([1, OMEGA])])
    assert g_sum(s, StepSet.selected([Position(0, 1)])) == P("w+1")
    assert g_sum(s, StepSet.all_ordinary()) == OMEGA
    assert g_sum(s, StepSet.all_natural()) == iter_nat_sum(s)


def test_g_sum_rejects_infinite_part_steps():
    s = SeqDesc([Repeat(1, P("w+1"))])
    with pytest.raises(ValueError):
        g_sum(s, StepSet.selected([Position(0, 2)]))
    assert g_sum(s, StepSet.selected([Position(0, OMEGA)])) == P("w+1")


@pytest.mark.parametrize(
    "segs, expected",
    [
        ([Explicit([1, OMEGA])], ["w", "w+1"]),
        ([Repeat(1, OMEGA)], ["w"]),
        ([Explicit([OMEGA, 1, OMEGA])], ["w*2", "w*2+1"]),
    ],
)
def test_spectrum_examples(segs, expected):
    assert g_sum_spectrum(SeqDesc(segs)) == [P(e) for e in expected]


@pytest.mark.parametrize(
    "segs, gamma_bar, xi",
    [
        ([Repeat(1, OMEGA)], "0", "1"),
        ([Repeat(1, W1), Repeat(W1, OMEGA)], "0", "w1+1"),
        ([Explicit([P("w^2")]), Repeat(1, OMEGA)], "1", "1"),
        ([Repeat(1, P("w*2"))], "w", "1"),
    ],
)
def test_tail_character_examples(segs, gamma_bar, xi):
    tc = tail_character(SeqDesc(segs))
    assert (tc.gamma_bar, tc.xi) == (P(gamma_bar), P(xi))


def test_tail_character_preconditions():
    with pytest.raises(ValueError):
        tail_character(SeqDesc([Repeat(1, P("w+1"))]))
    with pytest.raises(ValueError):
        tail_character(SeqDesc([Repeat(1, OMEGA), Repeat(0, OMEGA)]))


@given(sequences)
def test_ordinary_sum_below_natural_sum(s):
    assert iter_ord_sum(s) <= iter_nat_sum(s)


@given(sequences)
def test_zero_removal(s):
    assert iter_nat_sum(nonzero_subsequence(s)) == iter_nat_sum(s)


@given(sequences, st.data())
def test_prefix_monotone(s, data):
    pts = sample_points(s) + [seq_length(s)]
    a, b = sorted(data.draw(st.lists(st.sampled_from(pts), min_size=2, max_size=2)))
    assert partial_nat_sum(s, a) <= partial_nat_sum(s, b)
    if range_nat_sum(s, a, b):
        assert partial_nat_sum(s, a) < partial_nat_sum(s, b)


@given(sequences, st.data())
def test_picking_lemma(s, data):
    pts = sample_points(s)
    d = data.draw(st.sampled_from(pts))
    later = [p for p in pts if p >= d]
    picks = data.draw(st.lists(st.sampled_from(later), unique=True, max_size=3))
    from ordcalc.sequence import locate, value_at

    acc = partial_nat_sum(s, d)
    for g in picks:
        acc = nat_add(acc, value_at(s, locate(s, g)))
    assert iter_nat_sum(s) >= acc


@given(st.lists(st.tuples(ordinals, ordinals), min_size=1, max_size=4))
def test_pointwise_monotone(pairs):
    lo = SeqDesc([Explicit([min(p) for p in pairs]), Repeat(min(pairs[0]), OMEGA)])
    hi = SeqDesc([Explicit([max(p) for p in pairs]), Repeat(max(pairs[0]), OMEGA)])
    assert iter_nat_sum(lo) <= iter_nat_sum(hi)
    assert iter_ord_sum(lo) <= iter_ord_sum(hi)


@settings(max_examples=50)
@given(st.lists(ordinals, max_size=6))
def test_spectrum_matches_brute_force(vals):
    s = SeqDesc([Explicit(vals)]) if vals else SeqDesc()
    assert g_sum_spectrum(s) == brute_force_spectrum(vals)


def test_spectrum_brute_force_over_positions_with_tail():
    s = SeqDesc([Explicit([1, OMEGA]), Repeat(P("w+2"), P("w+2"))])
    candidates = [Position(0, 0), Position(0, 1), Position(1, OMEGA), Position(1, P("w+1"))]
    seen = set()
    for r in range(len(candidates) + 1):
        for chosen in itertools.combinations(candidates, r):
            seen.add(g_sum(s, StepSet.selected(chosen)))
    assert sorted(seen) == g_sum_spectrum(s)


@given(sequences, st.data())
def test_g_sandwich(s, data):
    pts = sample_points(s) + [seq_length(s)]
    a, b = sorted(data.draw(st.lists(st.sampled_from(pts), min_size=2, max_size=2)))
    g = StepSet.all_ordinary() if data.draw(st.booleans()) else StepSet.all_natural()
    left, mid, whole = range_g_sum(s, g, 0, a), range_g_sum(s, g, a, b), range_g_sum(s, g, 0, b)
    assert nat_add(left, mid) >= whole >= ord_add(left, mid)


def test_threshold_transfer_example():
    s = SeqDesc([Explicit([1, OMEGA])])
    for e, c in iter_nat_sum(s).monomials():
        assert iter_ord_sum(s) >= monomial(e, c)
