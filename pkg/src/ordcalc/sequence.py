"""Finite descriptions of ordinal-indexed sequences of ordinals.

A :class:`SeqDesc` is a list of segments, each either an explicit finite
list of values or a constant value repeated for an ordinal length.
Positions are addressed either as :class:`Position` (segment, offset) or
by their global ordinal index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from .core import (
    ONE,
    ZERO,
    Ordinal,
    Comparison,
    compare,
    left_difference,
    normalize,
    omega_pow,
    ord_add,
    ordinal,
    split_finite,
)

__all__ = [
    "Explicit",
    "Repeat",
    "Segment",
    "SeqDesc",
    "Position",
    "StepSet",
    "SplitError",
    "seq_length",
    "value_at",
    "locate",
    "index_of",
    "split_at",
    "slice_seq",
    "nonzero_subsequence",
    "is_eventually_zero",
    "Components",
    "components_of",
    "component_start",
    "same_component",
    "sample_points",
]


class SplitError(ValueError):
    """Requested split point does not lie within the sequence."""


@dataclass(frozen=True)
class Explicit:
    values: Tuple[Ordinal, ...]

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(_as_ord(v) for v in values))

    @property
    def length(self) -> Ordinal:
        return ordinal(len(self.values))


@dataclass(frozen=True)
class Repeat:
    value: Ordinal
    length: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "value", _as_ord(self.value))
        object.__setattr__(self, "length", _as_ord(self.length))
        if not self.length:
            raise ValueError("Repeat length must be at least 1")


Segment = Union[Explicit, Repeat]


def _as_ord(v) -> Ordinal:
    return v if isinstance(v, Ordinal) else ordinal(v)


@dataclass(frozen=True)
class SeqDesc:
    segments: Tuple[Segment, ...] = ()

    def __init__(self, segments: Iterable[Segment] = ()):
        object.__setattr__(self, "segments", tuple(segments))

    @property
    def length(self) -> Ordinal:
        return seq_length(self)

    def __add__(self, other: "SeqDesc") -> "SeqDesc":
        return SeqDesc(self.segments + other.segments)

    def starts(self) -> List[Ordinal]:
        """Global index at which each segment begins."""
        out, cum = [], ZERO
        for seg in self.segments:
            out.append(cum)
            cum = ord_add(cum, seg.length)
        return out


@dataclass(frozen=True, order=False)
class Position:
    segment: int
    offset: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "offset", _as_ord(self.offset))


def seq_length(s: SeqDesc) -> Ordinal:
    acc = ZERO
    for seg in s.segments:
        acc = ord_add(acc, seg.length)
    return acc


def _check_position(s: SeqDesc, p: Position) -> Segment:
    if not 0 <= p.segment < len(s.segments):
        raise IndexError(f"segment {p.segment} out of range")
    seg = s.segments[p.segment]
    if compare(p.offset, seg.length) is not Comparison.LESS:
        raise IndexError(f"offset {p.offset} outside segment {p.segment} of length {seg.length}")
    return seg


def value_at(s: SeqDesc, p: Position) -> Ordinal:
    seg = _check_position(s, p)
    if isinstance(seg, Explicit):
        return seg.values[int(p.offset)]
    return seg.value


def index_of(s: SeqDesc, p: Position) -> Ordinal:
    _check_position(s, p)
    return ord_add(s.starts()[p.segment], p.offset)


def locate(s: SeqDesc, gamma) -> Position:
    """Position of global index ``gamma``."""
    gamma = _as_ord(gamma)
    cum = ZERO
    for i, seg in enumerate(s.segments):
        end = ord_add(cum, seg.length)
        if compare(gamma, end) is Comparison.LESS:
            return Position(i, left_difference(cum, gamma))
        cum = end
    raise IndexError(f"index {gamma} outside sequence of length {cum}")


# finite Repeat heads up to this length are written out explicitly
_EXPLICIT_LIMIT = 1000


def _split_segment(seg: Segment, offset: Ordinal):
    if isinstance(seg, Explicit):
        k = int(offset)
        return Explicit(seg.values[:k]), Explicit(seg.values[k:])
    if not offset:
        head = None
    elif offset.is_finite and int(offset) <= _EXPLICIT_LIMIT:
        head = Explicit([seg.value] * int(offset))
    else:
        head = Repeat(seg.value, offset)
    return head, Repeat(seg.value, left_difference(offset, seg.length))


def split_at(s: SeqDesc, delta) -> Tuple[SeqDesc, SeqDesc]:
    """Prefix of length ``delta`` and the remaining suffix."""
    delta = _as_ord(delta)
    cum = ZERO
    for i, seg in enumerate(s.segments):
        if compare(delta, cum) is Comparison.EQUAL:
            return SeqDesc(s.segments[:i]), SeqDesc(s.segments[i:])
        end = ord_add(cum, seg.length)
        if compare(delta, end) is Comparison.LESS:
            head, tail = _split_segment(seg, left_difference(cum, delta))
            pre = s.segments[:i] + ((head,) if head is not None and head.length else ())
            return SeqDesc(pre), SeqDesc((tail,) + s.segments[i + 1:])
        cum = end
    if compare(delta, cum) is Comparison.EQUAL:
        return s, SeqDesc()
    raise SplitError(f"split point {delta} exceeds sequence length {cum}")


def slice_seq(s: SeqDesc, start, stop) -> SeqDesc:
    """The sub-description on ``[start, stop)``."""
    start, stop = _as_ord(start), _as_ord(stop)
    if compare(start, stop) is Comparison.GREATER:
        raise SplitError(f"empty-or-reversed range [{start}, {stop})")
    head, _ = split_at(s, stop)
    _, mid = split_at(head, start)
    return mid


def nonzero_subsequence(s: SeqDesc) -> SeqDesc:
    out = []
    for seg in s.segments:
        if isinstance(seg, Explicit):
            vals = [v for v in seg.values if v]
            if vals:
                out.append(Explicit(vals))
        elif seg.value:
            out.append(seg)
    return SeqDesc(out)


def is_eventually_zero(s: SeqDesc) -> bool:
    for seg in reversed(s.segments):
        if isinstance(seg, Explicit):
            if seg.values:
                # a successor-length sequence: the empty final stretch is vacuously zero
                return True
            continue
        _, n = split_finite(seg.length)
        if n or not seg.value:
            return True
        return False
    return True


def component_start(gamma) -> Ordinal:
    """Start of the component ``[alpha, alpha + w)`` containing ``gamma``."""
    limit_part, _ = split_finite(_as_ord(gamma))
    return limit_part


def same_component(zeta, g1, g2) -> bool:
    zeta, g1, g2 = _as_ord(zeta), _as_ord(g1), _as_ord(g2)
    if g1 >= zeta or g2 >= zeta:
        raise IndexError("index outside the ordinal")
    return component_start(g1) == component_start(g2)


@dataclass(frozen=True)
class Components:
    """The partition of ``zeta`` into intervals ``[alpha, alpha + w)`` and a final ``[alpha, zeta)``."""

    length: Ordinal

    def start_of(self, gamma) -> Ordinal:
        if _as_ord(gamma) >= self.length:
            raise IndexError("index outside the ordinal")
        return component_start(gamma)

    def same(self, g1, g2) -> bool:
        return same_component(self.length, g1, g2)

    @property
    def final(self) -> Optional[Tuple[Ordinal, Ordinal]]:
        """The last component as ``(alpha, zeta)``, or None when there is none
        (``zeta`` zero, or a limit of limits such as ``w^2``)."""
        limit_part, n = split_finite(self.length)
        if n:
            return limit_part, self.length
        if self.length and self.length.monomials()[-1][0] == ONE:
            *head, (e, c) = self.length.monomials()
            return normalize(head + [(e, c - 1)]), self.length
        return None


def components_of(zeta) -> Components:
    return Components(_as_ord(zeta))


def _sample_offsets(length: Ordinal, extra: int = 2) -> List[Ordinal]:
    pts = []
    prefix = ZERO
    for e, c in length.monomials():
        step = omega_pow(e)
        for _ in range(c):
            for k in range(extra + 1):
                p = ord_add(prefix, ordinal(k))
                if compare(p, length) is Comparison.LESS:
                    pts.append(p)
            prefix = ord_add(prefix, step)
    return pts


def sample_points(s: SeqDesc, extra: int = 2) -> List[Ordinal]:
    """A finite, sorted set of indices < length: every segment boundary,
    every explicit position, every block boundary inside a Repeat with a
    few finite offsets after each, and the finite tail of every Repeat."""
    pts = set()
    for start, seg in zip(s.starts(), s.segments):
        if isinstance(seg, Explicit):
            offs = [ordinal(j) for j in range(len(seg.values))]
        else:
            offs = _sample_offsets(seg.length, extra)
            inf, n = split_finite(seg.length)
            offs += [ord_add(inf, ordinal(j)) for j in range(n)]
        pts.update(ord_add(start, o) for o in offs)
    return sorted(pts)


@dataclass(frozen=True)
class StepSet:
    """Which successor steps use the natural sum.

    ``mode`` is ``"all-natural"``, ``"all-ordinary"`` or ``"selected"``.
    Selected positions must lie in an explicit segment or in the finite
    tail of a Repeat; steps inside the infinite part of a Repeat cannot
    change the value and are rejected.
    """

    mode: str = "all-natural"
    natural_steps: FrozenSet[Position] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.mode not in ("all-natural", "all-ordinary", "selected"):
            raise ValueError(f"unknown step mode {self.mode!r}")
        object.__setattr__(self, "natural_steps", frozenset(self.natural_steps))
        if self.mode != "selected" and self.natural_steps:
            raise ValueError("explicit steps are only allowed in selected mode")

    @classmethod
    def all_natural(cls) -> "StepSet":
        return cls("all-natural")

    @classmethod
    def all_ordinary(cls) -> "StepSet":
        return cls("all-ordinary")

    @classmethod
    def selected(cls, positions: Iterable[Position]) -> "StepSet":
        return cls("selected", frozenset(positions))

    @classmethod
    def from_indices(cls, s: SeqDesc, indices: Iterable) -> "StepSet":
        return cls.selected(locate(s, g) for g in indices)

    def validate(self, s: SeqDesc) -> None:
        for p in self.natural_steps:
            seg = _check_position(s, p)
            if isinstance(seg, Repeat):
                inf, _ = split_finite(seg.length)
                if compare(p.offset, inf) is Comparison.LESS:
                    raise ValueError(
                        f"step {p} lies in the infinite part of a Repeat segment"
                    )

    def is_natural(self, p: Position) -> bool:
        if self.mode == "all-natural":
            return True
        if self.mode == "all-ordinary":
            return False
        return p in self.natural_steps

    def indices(self, s: SeqDesc) -> FrozenSet[Ordinal]:
        return frozenset(index_of(s, p) for p in self.natural_steps)

    def restrict(self, s: SeqDesc, start, stop) -> "StepSet":
        """Steps for ``slice_seq(s, start, stop)``, reindexed from zero."""
        if self.mode != "selected":
            return self
        start, stop = _as_ord(start), _as_ord(stop)
        sub = slice_seq(s, start, stop)
        idx = [left_difference(start, g) for g in self.indices(s) if start <= g < stop]
        return StepSet.from_indices(sub, idx)
