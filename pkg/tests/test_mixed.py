import pytest
from hypothesis import given, settings

from ordcalc import parse_ordinal as P
from ordcalc.core import OMEGA, ONE, ZERO, blocks, nat_add, ord_add
from ordcalc.mixed import (
    TAIL,
    BlockPiece,
    BoundExceeded,
    Realization,
    UnsupportedShape,
    block_cover_check,
    canonical_realization,
    check_condition_gamma,
    enumerate_pure_interleavings,
    order_type_of,
    pure_merge,
)
from ordcalc.sequence import Explicit, Position, Repeat, SeqDesc, StepSet
from ordcalc.sums import g_sum

from strategies import ordinals


def pieces(*spec):
    return Realization(tuple(BlockPiece(o, P(t)) for t, o in spec))


def test_order_type_examples():
    assert order_type_of(pieces(("w", 0), ("1", 0), ("1", 0))) == P("w+2")
    assert order_type_of(pieces(("1", 0), ("w", 1))) == OMEGA
    assert order_type_of(pieces(("w^2", 0), ("w", 1), ("w", 1))) == P("w^2 + w*2")


def test_piece_must_be_power():
    with pytest.raises(ValueError):
        BlockPiece(0, P("w*2"))
    with pytest.raises(ValueError):
        BlockPiece(0, ZERO)


def test_pure_merge_examples():
    assert str(pure_merge(OMEGA, OMEGA)) == "[w@0, w@1]"
    r = pure_merge(ONE, OMEGA)
    assert str(r) == "[w@1, 1@0]" and order_type_of(r) == P("w+1")
    assert pure_merge(P("w^2+3"), ZERO).pieces == tuple(BlockPiece(0, b) for b in blocks(P("w^2+3")))


def test_interleaving_examples():
    assert enumerate_pure_interleavings(OMEGA, OMEGA) == [P("w*2")]
    assert enumerate_pure_interleavings(ONE, OMEGA) == [OMEGA, P("w+1")]
    assert enumerate_pure_interleavings(P("w+1"), OMEGA) == [P("w*2"), P("w*2+1")]


def test_interleaving_bound():
    with pytest.raises(BoundExceeded):
        enumerate_pure_interleavings(P("w*7"), P("w*6"))
    assert len(enumerate_pure_interleavings(P("w*7"), P("w*6"), bound=13)) >= 1


@settings(max_examples=60)
@given(ordinals, ordinals)
def test_carruth_maximality(a, b):
    if len(blocks(a)) + len(blocks(b)) > 12:
        return
    vals = enumerate_pure_interleavings(a, b)
    assert max(vals) == nat_add(a, b) == order_type_of(pure_merge(a, b))
    assert ord_add(a, b) in vals and ord_add(b, a) in vals


@given(ordinals, ordinals)
def test_block_cover(a, b):
    if len(blocks(a)) + len(blocks(b)) <= 12:
        assert block_cover_check(a, b)
        assert check_condition_gamma(pure_merge(a, b))


def test_block_cover_examples():
    assert block_cover_check(ONE, OMEGA)
    assert block_cover_check(P("w^2"), OMEGA)
    assert block_cover_check(P("w*3+1"), ZERO)


def test_canonical_examples():
    s = SeqDesc([Explicit([1, OMEGA])])
    r = canonical_realization(s, StepSet.selected([Position(0, 1)]))
    assert str(r) == "[w@1, 1@0]" and order_type_of(r) == P("w+1")
    r = canonical_realization(s, StepSet.all_ordinary())
    assert str(r) == "[1@0, w@1]" and order_type_of(r) == OMEGA
    r = canonical_realization(SeqDesc([Explicit([P("w^2")]), Repeat(1, OMEGA)]), StepSet.all_natural())
    assert r.pieces == (BlockPiece(0, P("w^2")), BlockPiece(TAIL, OMEGA))
    assert order_type_of(r) == P("w^2+w")


def test_canonical_unsupported():
    with pytest.raises(UnsupportedShape):
        canonical_realization(SeqDesc([Repeat(1, OMEGA), Explicit([1])]), StepSet.all_natural())
    with pytest.raises(UnsupportedShape):
        canonical_realization(SeqDesc([Repeat(1, P("w+1"))]), StepSet.all_natural())


@given(ordinals.map(lambda a: a), ordinals, ordinals)
def test_canonical_matches_g_sum(a, b, c):
    for tail in ([], [Repeat(c, P("w^2+w"))]):
        s = SeqDesc([Explicit([a, b, a])] + tail)
        for g in (StepSet.all_natural(), StepSet.all_ordinary(), StepSet.selected([Position(0, 1)])):
            r = canonical_realization(s, g)
            assert order_type_of(r) == g_sum(s, g)
            assert check_condition_gamma(r)


def test_condition_gamma_hand_built():
    assert check_condition_gamma(pieces(("1", 1), ("1", 0)))
    bad = Realization((BlockPiece(TAIL, OMEGA), BlockPiece(0, ONE)))
    assert not check_condition_gamma(bad)
