import pytest
from hypothesis import given, strategies as st

from ordcalc import parse_ordinal as P
from ordcalc.core import (
    ONE,
    OMEGA,
    ZERO,
    Comparison,
    atom,
    blocks,
    cardinality,
    compare,
    denormalize,
    left_difference,
    leading_exponent,
    nat_add,
    nat_mul_fin,
    normalize,
    omega_pow,
    ord_add,
    ord_mul,
    ordinal,
    smallest_exponent,
    split_finite,
    truncate,
)

from strategies import deep_ordinals, ordinals, with_atoms


def test_compare_examples():
    assert compare(ZERO, ZERO) is Comparison.EQUAL
    assert compare(OMEGA, P("w+1")) is Comparison.LESS
    assert compare(atom(1), P("w^w*5 + w^2")) is Comparison.GREATER
    assert compare(atom(1), atom(2)) is Comparison.LESS
    assert P("w1*2") > atom(1)


def test_ord_add_examples():
    assert ord_add(ONE, OMEGA) == OMEGA
    assert str(ord_add(OMEGA, ONE)) == "w + 1"
    assert ord_add(P("w^2*2 + w*3 + 4"), P("w*5 + 1")) == P("w^2*2 + w*8 + 1")


def test_nat_add_examples():
    assert nat_add(ONE, OMEGA) == P("w+1")
    assert nat_add(OMEGA, OMEGA) == P("w*2")
    assert nat_add(P("w^2+w*2+1"), P("w*3+5")) == P("w^2 + w*5 + 6")


def test_nat_mul_fin_examples():
    assert nat_mul_fin(P("w+1"), 3) == P("w*3+3")
    assert nat_mul_fin(P("w^2"), 0) == ZERO
    assert nat_mul_fin(P("w^2+w"), 2) == P("w^2*2 + w*2")


def test_ord_mul_examples():
    assert ord_mul(atom(1), OMEGA) == omega_pow(ord_add(atom(1), ONE))
    assert ord_mul(P("w^2+3"), ONE) == P("w^2+3")
    assert ord_mul(P("w+1"), ordinal(3)) == P("w*3+1")


def test_omega_pow_canonical():
    assert omega_pow(0) == ONE
    assert omega_pow(1) == OMEGA
    assert omega_pow(atom(1)) == atom(1)
    assert omega_pow(atom(1)).is_atom


def test_truncate_examples():
    assert truncate(P("w^2*2 + w + 3"), ONE) == P("w^2*2 + w")
    assert truncate(P("w+3"), 2) == ZERO
    assert truncate(P("w1 + w^2"), atom(1)) == atom(1)


def test_exponents():
    a = P("w^2*3 + w*2")
    assert smallest_exponent(a) == ONE
    assert leading_exponent(a) == ordinal(2)
    assert smallest_exponent(ord_mul(atom(1), OMEGA)) == P("w1+1")
    assert leading_exponent(atom(2)) == smallest_exponent(atom(2)) == atom(2)
    with pytest.raises(ValueError):
        smallest_exponent(ZERO)
    with pytest.raises(ValueError):
        leading_exponent(ZERO)


def test_blocks_examples():
    assert blocks(P("w^2*2 + w + 3")) == [P("w^2")] * 2 + [OMEGA] + [ONE] * 3
    assert blocks(ZERO) == []
    assert blocks(ord_mul(atom(1), OMEGA)) == [ord_mul(atom(1), OMEGA)]


def test_cardinality_and_split():
    assert cardinality(ordinal(4)) == 4
    assert cardinality(P("w^2+1")) == ("aleph", 0)
    assert cardinality(P("w1*w + 3")) == ("aleph", 1)
    assert split_finite(P("w*2+3")) == (P("w*2"), 3)


@given(ordinals, ordinals, ordinals)
def test_natural_sum_commutative_associative(a, b, c):
    assert nat_add(a, b) == nat_add(b, a)
    assert nat_add(nat_add(a, b), c) == nat_add(a, nat_add(b, c))


@given(with_atoms, with_atoms, with_atoms)
def test_natural_sum_strictly_monotone(a, b, c):
    assert compare(a, b) == compare(nat_add(a, c), nat_add(b, c))


@given(with_atoms, with_atoms)
def test_sum_sandwich(a, b):
    assert max(a, b) <= ord_add(a, b) <= nat_add(a, b)


@given(with_atoms, with_atoms, with_atoms)
def test_ordinal_sum_associative(a, b, c):
    assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))


@given(ordinals, ordinals)
def test_truncation_absorption(a, b):
    if b:
        t = truncate(a, leading_exponent(b))
        assert ord_add(a, b) == ord_add(t, b) == nat_add(t, b)


@given(ordinals, ordinals, ordinals)
def test_mixed_associativity_bounds(a, b, c):
    assert nat_add(ord_add(a, b), c) >= ord_add(a, nat_add(b, c))
    assert nat_add(a, ord_add(b, c)) >= ord_add(nat_add(a, b), c)


@given(ordinals, ordinals)
def test_left_difference(a, b):
    lo, hi = min(a, b), max(a, b)
    assert ord_add(lo, left_difference(lo, hi)) == hi


@given(deep_ordinals)
def test_normal_form_round_trips(a):
    assert normalize(denormalize(a)) == a
    acc = ZERO
    for x in blocks(a):
        acc = ord_add(acc, x)
    assert acc == a
    bl = blocks(a)
    assert all(x >= y for x, y in zip(bl, bl[1:]))


@given(ordinals, st.integers(0, 4))
def test_mul_fin_is_repeated_natural_sum(a, n):
    acc = ZERO
    for _ in range(n):
        acc = nat_add(acc, a)
    assert nat_mul_fin(a, n) == acc


@given(ordinals, st.integers(1, 4))
def test_ord_mul_by_finite_is_repeated_sum(a, n):
    acc = ZERO
    for _ in range(n):
        acc = ord_add(acc, a)
    assert ord_mul(a, ordinal(n)) == acc
