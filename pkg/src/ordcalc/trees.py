"""Size and rank of finitely described, countably branching well-founded trees.

Trees are reversed: leaves are minimal and a node lies above all of its
children.  A node's size is the invariant sum of its children's sizes
plus one; on finite trees this is the node count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from .core import OMEGA, ONE, ZERO, Ordinal, nat_add, ord_add
from .invariant import ALEPH0, Aleph, OrdMultiset, countable_nsum
from .mixed import canonical_realization, check_condition_gamma, order_type_of
from .sequence import Explicit, Repeat, SeqDesc, StepSet

__all__ = [
    "TreeDesc",
    "leaf",
    "star",
    "rank",
    "size",
    "forest_size",
    "extension_order_type",
    "truncate_tree",
    "node_count",
    "is_finite_tree",
    "linear_extensions",
    "expand_tree",
]

Mult = Union[int, Aleph]


@dataclass(frozen=True)
class TreeDesc:
    children: Tuple[Tuple["TreeDesc", Mult], ...] = ()

    def __post_init__(self):
        kids = tuple(self.children)
        for _, m in kids:
            if isinstance(m, Aleph):
                if m != ALEPH0:
                    raise ValueError("branching is limited to finite or countable multiplicity")
            elif m < 1:
                raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "children", kids)

    @property
    def is_leaf(self) -> bool:
        return not self.children


def leaf() -> TreeDesc:
    return TreeDesc()


def star(child: TreeDesc = TreeDesc(), mult: Mult = ALEPH0) -> TreeDesc:
    return TreeDesc(((child, mult),))


@lru_cache(maxsize=None)
def rank(t: TreeDesc) -> Ordinal:
    if t.is_leaf:
        return ZERO
    return ord_add(max(rank(c) for c, _ in t.children), ONE)


@lru_cache(maxsize=None)
def size(t: TreeDesc) -> Ordinal:
    if t.is_leaf:
        return ONE
    return ord_add(countable_nsum(OrdMultiset((size(c), m) for c, m in t.children)), ONE)


def forest_size(forest: Sequence[Tuple[TreeDesc, Mult]]) -> Ordinal:
    if not forest:
        return ZERO
    return countable_nsum(OrdMultiset((size(t), m) for t, m in forest))


@lru_cache(maxsize=None)
def extension_order_type(t: TreeDesc) -> Ordinal:
    """Order type of a downward-finite well-ordering built bottom-up.

    Children's extensions are laid side by side as a left-finite mixed sum
    (finitely many children explicitly; the countable children folded into
    one constant tail of their combined natural sum) and the node goes on
    top.  Computed through block realizations, not through the closed form
    used by :func:`size`.
    """
    if t.is_leaf:
        return ONE
    explicit: List[Ordinal] = []
    grouped = ZERO
    for c, m in t.children:
        v = extension_order_type(c)
        if isinstance(m, int):
            explicit.extend([v] * m)
        else:
            grouped = nat_add(grouped, v)
    segs = [Explicit(explicit)] if explicit else []
    if grouped:
        segs.append(Repeat(grouped, OMEGA))
    r = canonical_realization(SeqDesc(segs), StepSet.all_natural())
    if not check_condition_gamma(r):
        raise AssertionError("constructed extension is not left-finite")
    return ord_add(order_type_of(r), ONE)


def truncate_tree(t: TreeDesc, n: int) -> TreeDesc:
    """Replace every countable multiplicity by ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return TreeDesc(
        tuple((truncate_tree(c, n), n if isinstance(m, Aleph) else m) for c, m in t.children)
    )


def is_finite_tree(t: TreeDesc) -> bool:
    return all(isinstance(m, int) and is_finite_tree(c) for c, m in t.children)


def node_count(t: TreeDesc) -> int:
    if not is_finite_tree(t):
        raise ValueError("tree has infinitely many nodes")
    return 1 + sum(m * node_count(c) for c, m in t.children)


def expand_tree(t: TreeDesc):
    """Explicit nodes and (child, parent) edges of a finite tree; node 0 is the root."""
    edges: List[Tuple[int, int]] = []
    count = 0

    def walk(node: TreeDesc) -> int:
        nonlocal count
        me = count
        count += 1
        for c, m in node.children:
            for _ in range(m):
                edges.append((walk(c), me))
        return me

    walk(t)
    return count, edges


def linear_extensions(t: TreeDesc) -> Iterator[List[int]]:
    """Every linear order of the nodes of a finite tree placing children below parents."""
    import networkx as nx

    if not is_finite_tree(t):
        raise ValueError("brute-force extensions need a finite tree")
    n, edges = expand_tree(t)
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.all_topological_sorts(g)
