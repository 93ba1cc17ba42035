"""Permutation-invariant sums of multisets of ordinals.

For a countable multiset the three invariant sums coincide and are given
in closed form: with ``xi`` the least ordinal such that only finitely many
members are ``>= w^xi``, the value is the natural sum of those finitely
many members truncated at ``xi``, plus ``w^xi``.  Uncountable multisets
get exact values only for one known shape; otherwise arrangements give
bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .core import (
    ONE,
    ZERO,
    Ordinal,
    atom,
    cardinality,
    leading_exponent,
    nat_add,
    nat_mul_fin,
    omega_pow,
    ord_add,
    ord_mul,
    ordinal,
    truncate,
    OMEGA,
)
from .sequence import Explicit, Repeat, SeqDesc, seq_length
from .sums import iter_nat_sum

__all__ = [
    "Aleph",
    "ALEPH0",
    "Multiplicity",
    "OrdMultiset",
    "ArrangementMismatch",
    "UncountableMultiset",
    "card_add",
    "initial_ordinal",
    "countable_nsum",
    "arrangement_nat_sum",
    "multiset_of",
    "arrangement_family",
    "InvariantSums",
    "exact_sums",
    "bound_sums",
    "finite_member_bound",
    "component_permutation_check",
    "finite_grouping_check",
]


@dataclass(frozen=True, order=True)
class Aleph:
    index: int = 0

    def __str__(self) -> str:
        return "omega" if self.index == 0 else f"aleph{self.index}"


ALEPH0 = Aleph(0)
Multiplicity = Union[int, Aleph]


class ArrangementMismatch(ValueError):
    pass


class UncountableMultiset(ValueError):
    pass


def card_add(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    if isinstance(a, int) and isinstance(b, int):
        return a + b
    if isinstance(a, int):
        return b
    if isinstance(b, int):
        return a
    return max(a, b)


def initial_ordinal(c: Multiplicity) -> Ordinal:
    if isinstance(c, int):
        return ordinal(c)
    return OMEGA if c.index == 0 else atom(c.index)


def _card_of_length(length: Ordinal) -> Multiplicity:
    c = cardinality(length)
    return c if isinstance(c, int) else Aleph(c[1])


class OrdMultiset:
    """Distinct values with positive multiplicities (int or :class:`Aleph`)."""

    def __init__(self, entries: Iterable[Tuple[Ordinal, Multiplicity]] = ()):
        merged: Dict[Ordinal, Multiplicity] = {}
        for v, m in entries:
            if isinstance(m, int) and m < 1:
                raise ValueError("multiplicities must be positive")
            merged[v] = card_add(merged[v], m) if v in merged else m
        self.entries: Tuple[Tuple[Ordinal, Multiplicity], ...] = tuple(
            sorted(merged.items(), key=lambda e: e[0])
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, OrdMultiset) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return "OrdMultiset({" + ", ".join(f"{v}: {m}" for v, m in self.entries) + "})"

    def size(self) -> Multiplicity:
        total: Multiplicity = 0
        for _, m in self.entries:
            total = card_add(total, m)
        return total

    def is_countable(self) -> bool:
        return all(isinstance(m, int) or m.index == 0 for _, m in self.entries)


def multiset_of(arrangement: SeqDesc) -> OrdMultiset:
    """The multiset a sequence description enumerates."""
    out: List[Tuple[Ordinal, Multiplicity]] = []
    for seg in arrangement.segments:
        if isinstance(seg, Explicit):
            out.extend((v, 1) for v in seg.values)
        else:
            out.append((seg.value, _card_of_length(seg.length)))
    return OrdMultiset(out)


def countable_nsum(m: OrdMultiset) -> Ordinal:
    if not m.is_countable():
        raise UncountableMultiset("multiset has uncountable multiplicity")
    finite = [(v, n) for v, n in m if v and isinstance(n, int)]
    infinite = [v for v, n in m if v and not isinstance(n, int)]
    if not infinite:
        acc = ZERO
        for v, n in finite:
            acc = nat_add(acc, nat_mul_fin(v, n))
        return acc
    xi = ord_add(max(leading_exponent(v) for v in infinite), ONE)
    threshold = omega_pow(xi)
    acc = ZERO
    for v, n in finite:
        if v >= threshold:
            acc = nat_add(acc, nat_mul_fin(truncate(v, xi), n))
    return nat_add(acc, threshold)


def arrangement_nat_sum(m: OrdMultiset, arrangement: SeqDesc) -> Ordinal:
    got = multiset_of(arrangement)
    if got != m:
        raise ArrangementMismatch(f"arrangement enumerates {got}, expected {m}")
    return iter_nat_sum(arrangement)


_COUNT_SHAPE = OrdMultiset([(ONE, Aleph(1)), (atom(1), ALEPH0)])


@dataclass(frozen=True)
class InvariantSums:
    """Values or bounds for the invariant sums.

    ``exact`` tells whether ``nsum``/``nsum_bullet`` are the true values;
    otherwise they are upper bounds and ``lower`` is a lower bound for both.
    """

    nsum: Ordinal
    nsum_bullet: Ordinal
    nsum_circ: Optional[Ordinal]
    lower: Ordinal
    exact: bool


def exact_sums(m: OrdMultiset) -> InvariantSums:
    if m.is_countable():
        v = countable_nsum(m)
        return InvariantSums(v, v, v, v, True)
    nonzero = OrdMultiset((v, n) for v, n in m if v)
    if nonzero == _COUNT_SHAPE:
        w1 = atom(1)
        return InvariantSums(
            ord_mul(w1, OMEGA), ord_mul(w1, ord_add(OMEGA, ONE)), None, ord_mul(w1, OMEGA), True
        )
    raise UncountableMultiset("no exact method for this uncountable multiset; use bounds")


def finite_member_bound(m: OrdMultiset) -> Ordinal:
    """Supremum of natural sums of finitely many members: a lower bound for every arrangement."""
    acc = ZERO
    grow = ZERO
    for v, n in m:
        if not v:
            continue
        if isinstance(n, int):
            acc = nat_add(acc, nat_mul_fin(v, n))
        else:
            grow = nat_add(grow, v)
    if not grow:
        return acc
    # sup over k of acc # grow*k
    xi = ord_add(leading_exponent(grow), ONE)
    return ord_add(truncate(acc, xi), omega_pow(xi))


# arrangement generation ----------------------------------------------------

_COUNTABLE_LENGTHS = ["w", "w*2", "w+1", "w+3", "w^2", "w^2+w", "w*3+2", "w^2*2"]


def _lengths_pool(c: Aleph) -> List[Ordinal]:
    from .syntax import parse_ordinal

    if c.index == 0:
        return [parse_ordinal(t) for t in _COUNTABLE_LENGTHS]
    k = atom(c.index)
    return [k, ord_mul(k, ordinal(2)), ord_add(k, OMEGA), ord_add(k, ordinal(3)), ord_mul(k, OMEGA)]


def _split_finite_count(n: int, rng: random.Random) -> List[int]:
    parts = []
    while n:
        k = rng.randint(1, n)
        parts.append(k)
        n -= k
    return parts


def _chunks(v: Ordinal, n: Multiplicity, rng: random.Random) -> List:
    if isinstance(n, int):
        return [Explicit([v] * k) if rng.random() < 0.5 else Repeat(v, k) for k in _split_finite_count(n, rng)]
    big = _lengths_pool(n)
    out = [Repeat(v, rng.choice(big)) for _ in range(rng.randint(1, 2))]
    if n.index > 0 and rng.random() < 0.5:
        out.append(Repeat(v, rng.choice(_lengths_pool(ALEPH0))))
    out.extend(Explicit([v] * k) for k in range(rng.randint(0, 2)) if k)
    return out


def _coalesce(segs: Sequence) -> SeqDesc:
    out: List = []
    for seg in segs:
        if isinstance(seg, Explicit) and out and isinstance(out[-1], Explicit):
            out[-1] = Explicit(out[-1].values + seg.values)
        elif not (isinstance(seg, Explicit) and not seg.values):
            out.append(seg)
    return SeqDesc(out)


def _random_any(m: OrdMultiset, rng: random.Random, order: str) -> SeqDesc:
    chunks = [(v, c) for v, n in m for c in _chunks(v, n, rng)]
    if order == "ascending":
        chunks.sort(key=lambda vc: vc[0])
    elif order == "descending":
        chunks.sort(key=lambda vc: vc[0], reverse=True)
    elif order == "interleaved":
        # alternate smallest / largest remaining values
        chunks.sort(key=lambda vc: vc[0])
        lo, hi, mixed = 0, len(chunks) - 1, []
        while lo <= hi:
            mixed.append(chunks[lo])
            if lo != hi:
                mixed.append(chunks[hi])
            lo, hi = lo + 1, hi - 1
        chunks = mixed
    else:
        rng.shuffle(chunks)
    return _coalesce([c for _, c in chunks])


def _random_initial(m: OrdMultiset, rng: random.Random) -> Optional[SeqDesc]:
    """An arrangement whose length is the initial ordinal of ``|m|``, if one is expressible."""
    size = m.size()
    if isinstance(size, int):
        return _random_any(m, rng, "random")
    top = [(v, n) for v, n in m if not isinstance(n, int) and n == size]
    if len(top) != 1:
        return None
    last_v = top[0][0]
    prefix: List = []
    for v, n in m:
        if v == last_v:
            extra = rng.randint(0, 3)
            if extra:
                prefix.append(Explicit([v] * extra))
            continue
        if isinstance(n, int):
            prefix.extend(_chunks(v, n, rng))
        else:
            prefix.extend(Repeat(v, rng.choice(_lengths_pool(n))) for _ in range(rng.randint(1, 2)))
    rng.shuffle(prefix)
    return _coalesce(prefix + [Repeat(last_v, initial_ordinal(size))])


def arrangement_family(
    m: OrdMultiset, count: int, seed: int = 0, initial_length: bool = False
) -> List[SeqDesc]:
    """Up to ``count`` distinct, deterministic arrangements of ``m``.

    With ``initial_length`` every arrangement has length equal to the
    initial ordinal of ``|m|``.  The first arrangements are the ascending,
    descending and interleaved orderings; the rest are seeded shuffles.
    """
    rng = random.Random(seed)
    target = initial_ordinal(m.size())
    seen, out = set(), []
    orders = ["ascending", "descending", "interleaved"]
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        if initial_length:
            arr = _random_initial(m, rng)
            if arr is None:
                break
        else:
            arr = _random_any(m, rng, orders[attempts - 1] if attempts <= 3 else "random")
        if arr in seen:
            continue
        if initial_length and seq_length(arr) != target:
            continue
        assert multiset_of(arr) == m
        seen.add(arr)
        out.append(arr)
    return out


def bound_sums(m: OrdMultiset, count: int = 24, seed: int = 0) -> InvariantSums:
    """Upper bounds from a seeded arrangement family; a lower bound from finite sub-sums."""
    anys = arrangement_family(m, count, seed)
    inits = arrangement_family(m, count, seed, initial_length=True)
    best_any = min(iter_nat_sum(a) for a in anys)
    best_init = min((iter_nat_sum(a) for a in inits), default=None)
    if best_init is None:
        best_init = best_any
    return InvariantSums(best_any, best_init, None, finite_member_bound(m), False)


# special-permutation harnesses ---------------------------------------------

def _first_explicit(s: SeqDesc) -> Explicit:
    if not s.segments or not isinstance(s.segments[0], Explicit):
        raise ValueError("sequence must begin with an explicit segment")
    return s.segments[0]


def component_permutation_check(s: SeqDesc, perm: Mapping[int, int]) -> bool:
    """Whether permuting explicit positions inside the first component keeps the natural sum.

    ``perm`` maps source to target positions; unmapped positions are fixed.
    """
    head = _first_explicit(s)
    n = len(head.values)
    for a, b in perm.items():
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"permutation moves {a} -> {b} outside the explicit prefix of the first component")
    if sorted(perm) != sorted(perm.values()):
        raise ValueError("not a permutation")
    vals = list(head.values)
    for a, b in perm.items():
        vals[b] = head.values[a]
    moved = SeqDesc((Explicit(vals),) + s.segments[1:])
    return iter_nat_sum(moved) == iter_nat_sum(s)


def finite_grouping_check(s: SeqDesc, cells: Sequence[Sequence[int]]) -> bool:
    """Whether replacing each cell of the explicit prefix by its natural sum keeps the natural sum."""
    head = _first_explicit(s)
    flat = sorted(i for cell in cells for i in cell)
    if flat != list(range(len(head.values))) or any(not cell for cell in cells):
        raise ValueError("cells must partition the explicit prefix into nonempty sets")
    grouped: List[Ordinal] = []
    for cell in cells:
        acc = ZERO
        for i in cell:
            acc = nat_add(acc, head.values[i])
        grouped.append(acc)
    regrouped = SeqDesc((Explicit(grouped),) + s.segments[1:])
    return iter_nat_sum(regrouped) == iter_nat_sum(s)
