"""Seeded random instances: ordinals, sequences, step sets, multisets, trees."""

from __future__ import annotations

import random
from typing import List, Tuple

from .core import ZERO, Ordinal, atom, normalize, ord_add, ordinal, split_finite
from .invariant import ALEPH0, OrdMultiset
from .sequence import Explicit, Position, Repeat, SeqDesc, StepSet, sample_points, seq_length
from .syntax import parse_ordinal
from .trees import TreeDesc

__all__ = [
    "random_below_tower",
    "random_ordinal",
    "random_sequence",
    "random_limit_sequence",
    "random_explicit_sequence",
    "random_stepset",
    "random_split",
    "random_finite_tree",
    "random_tree",
    "random_countable_multiset",
]


def random_below_tower(rng: random.Random, k: int, terms: int = 3, coef: int = 9) -> Ordinal:
    """An ordinal below ``w^(w^k)``: exponents are themselves below ``w^k`` with finite exponents."""
    if k <= 0:
        return ordinal(rng.randint(0, coef))
    n = rng.randint(0, terms)
    exps = {_exp_below(rng, k, terms, coef) for _ in range(n)}
    return normalize((e, rng.randint(1, coef)) for e in sorted(exps, reverse=True))


def _exp_below(rng: random.Random, k: int, terms: int, coef: int) -> Ordinal:
    # exponent < w^k: a CNF whose own exponents are naturals < k
    n = rng.randint(0, terms)
    degs = sorted({rng.randrange(k) for _ in range(n)}, reverse=True)
    return normalize((ordinal(d), rng.randint(1, coef)) for d in degs)


def random_ordinal(rng: random.Random, max_exp: int = 3, terms: int = 3, coef: int = 5, atoms: bool = False) -> Ordinal:
    """An ordinal below ``w^max_exp`` (finite exponents), optionally with atom-based monomials on top."""
    n = rng.randint(0, terms)
    exps = sorted({rng.randrange(max_exp) for _ in range(n)}, reverse=True)
    parts = [(ordinal(e), rng.randint(1, coef)) for e in exps]
    if atoms and rng.random() < 0.3:
        top = atom(1)
        if rng.random() < 0.5:
            top = normalize([(atom(1), 1), (ordinal(rng.randint(0, 2)), 1)])
        parts.insert(0, (top, rng.randint(1, 2)))
    return normalize(parts)


_LENGTHS = ["1", "2", "3", "w", "w+1", "w+2", "w*2", "w*2+1", "w^2", "w^2+w", "w^2+2"]
_LIMIT_LENGTHS = ["w", "w*2", "w*3", "w^2", "w^2+w", "w^2*2", "w^3"]


def _segment(rng: random.Random, max_exp: int, zero_rate: float) -> object:
    if rng.random() < 0.5:
        vals = [ZERO if rng.random() < zero_rate else random_ordinal(rng, max_exp) for _ in range(rng.randint(1, 4))]
        return Explicit(vals)
    v = ZERO if rng.random() < zero_rate else random_ordinal(rng, max_exp)
    return Repeat(v, parse_ordinal(rng.choice(_LENGTHS)))


def random_sequence(rng: random.Random, segments: int = 4, max_exp: int = 3, zero_rate: float = 0.15) -> SeqDesc:
    return SeqDesc(_segment(rng, max_exp, zero_rate) for _ in range(rng.randint(1, segments)))


def random_limit_sequence(rng: random.Random, segments: int = 4, max_exp: int = 3) -> SeqDesc:
    """Limit length, not eventually zero: ends with a nonzero Repeat of limit length."""
    head = random_sequence(rng, segments - 1, max_exp) if segments > 1 and rng.random() < 0.8 else SeqDesc()
    v = random_ordinal(rng, max_exp)
    while not v:
        v = random_ordinal(rng, max_exp)
    return head + SeqDesc([Repeat(v, parse_ordinal(rng.choice(_LIMIT_LENGTHS)))])


def random_explicit_sequence(rng: random.Random, max_len: int = 8, max_exp: int = 3) -> SeqDesc:
    vals = [random_ordinal(rng, max_exp, terms=2, coef=3) for _ in range(rng.randint(0, max_len))]
    return SeqDesc([Explicit(vals)]) if vals else SeqDesc()


def _choosable_positions(s: SeqDesc) -> List[Position]:
    out = []
    for i, seg in enumerate(s.segments):
        if isinstance(seg, Explicit):
            out.extend(Position(i, j) for j in range(len(seg.values)))
        else:
            inf, n = split_finite(seg.length)
            out.extend(Position(i, ord_add(inf, ordinal(j))) for j in range(n))
    return out


def random_stepset(rng: random.Random, s: SeqDesc) -> StepSet:
    r = rng.random()
    if r < 0.15:
        return StepSet.all_natural()
    if r < 0.3:
        return StepSet.all_ordinary()
    pos = _choosable_positions(s)
    return StepSet.selected(p for p in pos if rng.random() < 0.5)


def random_split(rng: random.Random, s: SeqDesc) -> Tuple[Ordinal, Ordinal]:
    """Two split points ``d1 <= d2 <= length``."""
    pts = sample_points(s) + [seq_length(s)]
    a, b = rng.choice(pts), rng.choice(pts)
    return (a, b) if a <= b else (b, a)


def random_finite_tree(rng: random.Random, max_nodes: int = 200, branch: int = 4, depth: int = 5) -> TreeDesc:
    budget = [rng.randint(1, max_nodes) - 1]

    def build(d: int) -> TreeDesc:
        kids = []
        while d and budget[0] > 0 and rng.random() < 0.7 and len(kids) < branch:
            sub = build(d - 1)
            cost = _count(sub)
            m = rng.randint(1, 3)
            m = min(m, budget[0] // cost)
            if m < 1:
                break
            budget[0] -= cost * m
            kids.append((sub, m))
        return TreeDesc(tuple(kids))

    def _count(t: TreeDesc) -> int:
        return 1 + sum(m * _count(c) for c, m in t.children)

    return build(depth)


def random_tree(rng: random.Random, depth: int = 3, branch: int = 3) -> TreeDesc:
    """A tree whose multiplicities are finite or countable."""
    if depth == 0 or rng.random() < 0.25:
        return TreeDesc()
    kids = []
    for _ in range(rng.randint(1, branch)):
        m = ALEPH0 if rng.random() < 0.4 else rng.randint(1, 3)
        kids.append((random_tree(rng, depth - 1, branch), m))
    return TreeDesc(tuple(kids))


def random_countable_multiset(
    rng: random.Random, infinite_entries: int = 1, finite_entries: int = 4, max_exp: int = 3
) -> OrdMultiset:
    entries = {}
    while len(entries) < infinite_entries:
        v = random_ordinal(rng, max_exp)
        if v:
            entries[v] = ALEPH0
    target = len(entries) + rng.randint(1, finite_entries)
    while len(entries) < target:
        v = random_ordinal(rng, max_exp + 1)
        entries.setdefault(v, rng.randint(1, 3))
    return OrdMultiset(entries.items())
