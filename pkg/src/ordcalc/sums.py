"""Transfinite sums over sequence descriptions.

The natural-sum fold uses ``acc # a`` at successor steps and suprema at
limits.  A constant block ``Repeat(a, w^eta)`` with ``a != 0`` and
``eta >= 1`` moves the accumulator to ``acc + w^(lead(a) + eta)``; this
is the closed form of the supremum, and it holds whatever operator the
individual steps inside the block use, since every intermediate value
lies between ``acc + a*k`` and ``acc # a*k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Set

from .core import (
    ZERO,
    Ordinal,
    leading_exponent,
    monomial,
    nat_add,
    nat_mul_fin,
    omega_pow,
    ord_add,
    ord_mul,
    ordinal,
    smallest_exponent,
    split_finite,
)
from .sequence import (
    Explicit,
    Position,
    SeqDesc,
    StepSet,
    is_eventually_zero,
    sample_points,
    seq_length,
    slice_seq,
    split_at,
)

__all__ = [
    "iter_nat_sum",
    "iter_ord_sum",
    "g_sum",
    "partial_nat_sum",
    "partial_ord_sum",
    "range_nat_sum",
    "range_ord_sum",
    "range_g_sum",
    "g_sum_spectrum",
    "TailCharacter",
    "tail_character",
    "repeat_limit",
]


def repeat_limit(acc: Ordinal, value: Ordinal, length: Ordinal) -> Ordinal:
    """Accumulator after the infinite part of ``Repeat(value, length)``."""
    if not value:
        return acc
    inf, _ = split_finite(length)
    lead = leading_exponent(value)
    for eta, c in inf.monomials():
        acc = ord_add(acc, monomial(ord_add(lead, eta), c))
    return acc


def _fold(s: SeqDesc, natural: Callable[[Position], bool]) -> Ordinal:
    acc = ZERO
    for i, seg in enumerate(s.segments):
        if isinstance(seg, Explicit):
            for j, v in enumerate(seg.values):
                acc = nat_add(acc, v) if natural(Position(i, j)) else ord_add(acc, v)
            continue
        if not seg.value:
            continue
        acc = repeat_limit(acc, seg.value, seg.length)
        inf, n = split_finite(seg.length)
        j = 0
        while j < n:
            nat = natural(Position(i, ord_add(inf, ordinal(j))))
            k = j + 1
            while k < n and natural(Position(i, ord_add(inf, ordinal(k)))) == nat:
                k += 1
            if nat:
                acc = nat_add(acc, nat_mul_fin(seg.value, k - j))
            else:
                acc = ord_add(acc, ord_mul(seg.value, ordinal(k - j)))
            j = k
    return acc


def g_sum(s: SeqDesc, g: StepSet) -> Ordinal:
    """Partial natural sum relative to the natural steps in ``g``."""
    g.validate(s)
    if g.mode == "selected":
        steps = g.natural_steps
        return _fold(s, steps.__contains__)
    return _fold(s, lambda _p, nat=(g.mode == "all-natural"): nat)


def iter_nat_sum(s: SeqDesc) -> Ordinal:
    return _fold(s, lambda _p: True)


def iter_ord_sum(s: SeqDesc) -> Ordinal:
    acc = ZERO
    for seg in s.segments:
        if isinstance(seg, Explicit):
            for v in seg.values:
                acc = ord_add(acc, v)
        else:
            acc = ord_add(acc, ord_mul(seg.value, seg.length))
    return acc


def partial_nat_sum(s: SeqDesc, delta) -> Ordinal:
    return iter_nat_sum(split_at(s, delta)[0])


def partial_ord_sum(s: SeqDesc, delta) -> Ordinal:
    return iter_ord_sum(split_at(s, delta)[0])


def range_nat_sum(s: SeqDesc, start, stop) -> Ordinal:
    return iter_nat_sum(slice_seq(s, start, stop))


def range_ord_sum(s: SeqDesc, start, stop) -> Ordinal:
    return iter_ord_sum(slice_seq(s, start, stop))


def range_g_sum(s: SeqDesc, g: StepSet, start, stop) -> Ordinal:
    return g_sum(slice_seq(s, start, stop), g.restrict(s, start, stop))


def g_sum_spectrum(s: SeqDesc) -> List[Ordinal]:
    """Every value of ``g_sum(s, G)`` as ``G`` ranges over all step sets, ascending.

    Steps inside the infinite part of a Repeat never matter, so only the
    explicit positions and the finite tails of Repeats branch.
    """
    values: Set[Ordinal] = {ZERO}
    for seg in s.segments:
        if isinstance(seg, Explicit):
            for v in seg.values:
                values = {w for x in values for w in (nat_add(x, v), ord_add(x, v))}
            continue
        if not seg.value:
            continue
        values = {repeat_limit(x, seg.value, seg.length) for x in values}
        _, n = split_finite(seg.length)
        for _ in range(n):
            values = {w for x in values for w in (nat_add(x, seg.value), ord_add(x, seg.value))}
    return sorted(values)


@dataclass(frozen=True)
class TailCharacter:
    gamma_bar: Ordinal
    xi: Ordinal
    total: Ordinal
    checked: FrozenSet[Ordinal] = frozenset()


def tail_character(s: SeqDesc) -> TailCharacter:
    """Least sampled split point from which every tail sums to ``w^xi``.

    ``xi`` is the smallest exponent of the natural sum.  The condition is
    checked at every point of :func:`~ordcalc.sequence.sample_points` at
    or after the returned ``gamma_bar``.
    """
    zeta = seq_length(s)
    if not zeta or not smallest_exponent(zeta):
        raise ValueError(f"sequence length {zeta} is not a limit ordinal")
    if is_eventually_zero(s):
        raise ValueError("sequence is eventually zero")
    total = iter_nat_sum(s)
    xi = smallest_exponent(total)
    tail = omega_pow(xi)

    def good(eps: Ordinal) -> bool:
        return (
            range_nat_sum(s, eps, zeta) == tail
            and range_ord_sum(s, eps, zeta) == tail
            and ord_add(partial_nat_sum(s, eps), tail) == total
        )

    points = sample_points(s)
    gamma_bar = None
    for eps in reversed(points):
        if not good(eps):
            break
        gamma_bar = eps
    if gamma_bar is None:
        raise AssertionError(f"no sampled tail point of {zeta} has tail sum {tail}")
    return TailCharacter(gamma_bar, xi, total, frozenset(p for p in points if p >= gamma_bar))
