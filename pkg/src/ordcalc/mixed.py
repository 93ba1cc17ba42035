"""Block-level realizations of mixed sums.

A :class:`Realization` is a finite left-to-right list of pieces, each an
``w^x`` block tagged with the summand it belongs to.  The order type of
the realization is the ordinal sum of its pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

from .core import (
    ZERO,
    Comparison,
    Ordinal,
    blocks,
    compare,
    nat_add,
    ord_add,
    smallest_exponent,
)
from .sequence import Explicit, Position, SeqDesc, StepSet
from .sums import repeat_limit

__all__ = [
    "TAIL",
    "BlockPiece",
    "Realization",
    "order_type_of",
    "pure_merge",
    "enumerate_pure_interleavings",
    "BoundExceeded",
    "UnsupportedShape",
    "canonical_realization",
    "check_condition_gamma",
    "pieces_within_blocks",
    "block_cover_check",
]


class _Tail:
    """Owner tag for a collapsed infinite tail of summands."""

    def __repr__(self) -> str:
        return "TAIL"

    def __reduce__(self):
        return "TAIL"


TAIL = _Tail()
Owner = Union[int, _Tail]


class BoundExceeded(ValueError):
    pass


class UnsupportedShape(ValueError):
    pass


@dataclass(frozen=True)
class BlockPiece:
    owner: Owner
    order_type: Ordinal

    def __post_init__(self):
        t = self.order_type
        if not t or len(t.monomials()) != 1 or t.monomials()[0][1] != 1:
            raise ValueError(f"piece order type {t} is not a power of w")


@dataclass(frozen=True)
class Realization:
    pieces: Tuple[BlockPiece, ...] = ()

    def __iter__(self):
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def owners(self) -> List[Owner]:
        seen: Dict = {}
        for p in self.pieces:
            seen.setdefault(p.owner, None)
        return list(seen)

    def __str__(self) -> str:
        return "[" + ", ".join(f"{p.order_type}@{p.owner}" for p in self.pieces) + "]"


def order_type_of(r: Union[Realization, Sequence[BlockPiece]]) -> Ordinal:
    acc = ZERO
    for p in r:
        acc = ord_add(acc, p.order_type)
    return acc


def _merge(left: Sequence[Tuple[Ordinal, object]], right: Sequence[Tuple[Ordinal, object]]):
    """Stable merge by non-increasing order type; ``left`` wins ties."""
    out, i, j = [], 0, 0
    while i < len(left) and j < len(right):
        if compare(left[i][0], right[j][0]) is Comparison.LESS:
            out.append(right[j])
            j += 1
        else:
            out.append(left[i])
            i += 1
    return out + list(left[i:]) + list(right[j:])


def pure_merge(a, b) -> Realization:
    left = [(t, BlockPiece(0, t)) for t in blocks(a)]
    right = [(t, BlockPiece(1, t)) for t in blocks(b)]
    return Realization(tuple(p for _, p in _merge(left, right)))


def enumerate_pure_interleavings(a, b, bound: int = 12) -> List[Ordinal]:
    """Order types of every shuffle of the blocks of ``a`` and ``b``, ascending.

    Each summand keeps its own block order; duplicates are removed.
    """
    ba, bb = tuple(blocks(a)), tuple(blocks(b))
    if len(ba) + len(bb) > bound:
        raise BoundExceeded(f"{len(ba) + len(bb)} blocks exceed the bound {bound}")

    @lru_cache(maxsize=None)
    def suffixes(i: int, j: int) -> FrozenSet[Ordinal]:
        if i == len(ba) and j == len(bb):
            return frozenset([ZERO])
        out = set()
        if i < len(ba):
            out.update(ord_add(ba[i], s) for s in suffixes(i + 1, j))
        if j < len(bb):
            out.update(ord_add(bb[j], s) for s in suffixes(i, j + 1))
        return frozenset(out)

    return sorted(suffixes(0, 0))


def shuffle_count(a, b) -> int:
    na, nb = len(blocks(a)), len(blocks(b))
    return comb(na + nb, na)


def _group_by_blocks(pieces: Sequence[BlockPiece]) -> List[Tuple[Ordinal, List[BlockPiece]]]:
    """Partition ``pieces`` into the blocks of their combined order type."""
    total = order_type_of(pieces)
    bounds, cum = [], ZERO
    for t in blocks(total):
        cum = ord_add(cum, t)
        bounds.append((t, cum))
    groups: List[Tuple[Ordinal, List[BlockPiece]]] = [(t, []) for t, _ in bounds]
    start, k = ZERO, 0
    for p in pieces:
        while compare(start, bounds[k][1]) is not Comparison.LESS:
            k += 1
        end = ord_add(start, p.order_type)
        if compare(end, bounds[k][1]) is Comparison.GREATER:
            raise AssertionError(f"piece {p} straddles a block boundary")
        groups[k][1].append(p)
        start = end
    return groups


def pieces_within_blocks(r: Realization) -> bool:
    try:
        _group_by_blocks(r.pieces)
    except AssertionError:
        return False
    return True


def block_cover_check(a, b, bound: int = 12) -> bool:
    """Every block of either summand lies inside one block of ``a # b``."""
    if len(blocks(a)) + len(blocks(b)) > bound:
        raise BoundExceeded("too many blocks")
    r = pure_merge(a, b)
    return order_type_of(r) == nat_add(a, b) and pieces_within_blocks(r)


def _explicit_prefix(s: SeqDesc):
    """Split ``s`` into explicit values and an optional final infinite Repeat."""
    values: List[Tuple[Position, Ordinal]] = []
    tail = None
    for i, seg in enumerate(s.segments):
        if tail is not None:
            raise UnsupportedShape("only a final Repeat segment may be infinite")
        if isinstance(seg, Explicit):
            values.extend((Position(i, j), v) for j, v in enumerate(seg.values))
        elif seg.length.is_finite:
            values.extend((Position(i, j), seg.value) for j in range(int(seg.length)))
        elif smallest_exponent(seg.length):
            tail = seg
        else:
            raise UnsupportedShape("an infinite Repeat must have limit length")
    return values, tail


def canonical_realization(s: SeqDesc, g: StepSet) -> Realization:
    """A realization of ``g_sum(s, g)`` built step by step.

    A natural step merges the current blocks with the new summand's blocks
    in non-increasing order; an ordinary step puts the new summand on top.
    A final infinite Repeat contributes TAIL pieces, one per block of its
    closed-form contribution.
    """
    g.validate(s)
    values, tail = _explicit_prefix(s)
    pieces: List[BlockPiece] = []
    for idx, (pos, v) in enumerate(values):
        if not v:
            continue
        new = [BlockPiece(idx, t) for t in blocks(v)]
        if g.is_natural(pos):
            groups = _group_by_blocks(pieces) if pieces else []
            merged = _merge(groups, [(p.order_type, [p]) for p in new])
            pieces = [p for _, grp in merged for p in grp]
        else:
            pieces.extend(new)
    if tail is not None and tail.value:
        acc = order_type_of(pieces)
        extra = repeat_limit(ZERO, tail.value, tail.length)
        pieces.extend(BlockPiece(TAIL, t) for t in blocks(extra))
        assert ord_add(acc, extra) == repeat_limit(acc, tail.value, tail.length)
    return Realization(tuple(pieces))


def _owner_key(o: Owner):
    return (1, 0) if o is TAIL else (0, o)


def check_condition_gamma(r: Realization) -> bool:
    """For every owner, only finitely many later owners have a piece below one of its pieces.

    A TAIL piece stands for infinitely many later owners, so the condition
    fails exactly when a TAIL piece precedes a piece of an ordinary owner.
    """
    seen_tail = False
    for p in r.pieces:
        if p.owner is TAIL:
            seen_tail = True
        elif seen_tail:
            return False
    return True


def gamma_sets(r: Realization) -> Dict[Owner, set]:
    """``owner -> {later owners with a piece before some piece of owner}``."""
    out: Dict[Owner, set] = {o: set() for o in r.owners()}
    for i, p in enumerate(r.pieces):
        for q in r.pieces[:i]:
            if _owner_key(q.owner) > _owner_key(p.owner):
                out[p.owner].add(q.owner)
    return out
