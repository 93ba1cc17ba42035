import random

import pytest
from hypothesis import given, settings, strategies as st

from ordcalc import parse_ordinal as P
from ordcalc.core import ONE, ZERO, ord_add, ordinal
from ordcalc.gen import random_finite_tree, random_tree
from ordcalc.invariant import ALEPH0
from ordcalc.trees import (
    TreeDesc,
    extension_order_type,
    forest_size,
    is_finite_tree,
    leaf,
    linear_extensions,
    node_count,
    rank,
    size,
    star,
    truncate_tree,
)

LEAF = leaf()
STAR = star()
NESTED = star(STAR)


def test_rank():
    assert rank(LEAF) == ZERO
    assert rank(STAR) == ONE
    assert rank(NESTED) == ordinal(2)


def test_size():
    path = TreeDesc(((TreeDesc(((LEAF, 1),)), 1),))
    cherry = TreeDesc(((LEAF, 2),))
    assert size(path) == size(cherry) == ordinal(3)
    assert size(STAR) == P("w+1")
    assert size(NESTED) == P("w^2+1")


def test_forest_size():
    assert forest_size([(LEAF, 2)]) == ordinal(2)
    assert forest_size([(LEAF, ALEPH0)]) == P("w")
    assert forest_size([(NESTED, 1)]) == size(NESTED)
    assert forest_size([]) == ZERO


def test_extension_examples():
    assert extension_order_type(LEAF) == ONE
    assert extension_order_type(STAR) == P("w+1")
    t = TreeDesc(((LEAF, 3), (TreeDesc(((LEAF, 2),)), 2)))
    assert extension_order_type(t) == ordinal(node_count(t)) == ordinal(10)


def test_truncate_tree():
    assert truncate_tree(STAR, 3) == TreeDesc(((LEAF, 3),))
    t = TreeDesc(((LEAF, 2),))
    assert truncate_tree(t, 5) == t
    two = truncate_tree(NESTED, 2)
    assert is_finite_tree(two) and node_count(two) == 7
    with pytest.raises(ValueError):
        truncate_tree(STAR, 0)


def test_bad_multiplicity():
    with pytest.raises(ValueError):
        TreeDesc(((LEAF, 0),))
    with pytest.raises(ValueError):
        node_count(STAR)


@settings(max_examples=60)
@given(st.integers(0, 100_000))
def test_finite_size_is_node_count(seed):
    t = random_finite_tree(random.Random(seed))
    assert node_count(t) <= 200
    assert size(t) == extension_order_type(t) == ordinal(node_count(t))


@settings(max_examples=60)
@given(st.integers(0, 100_000))
def test_infinite_trees(seed):
    t = random_tree(random.Random(seed))
    assert extension_order_type(t) == size(t)
    assert size(t) >= ord_add(rank(t), ONE)
    sizes = [size(truncate_tree(t, n)) for n in range(1, 7)]
    assert sizes == sorted(sizes) and sizes[-1] <= size(t)


def test_linear_extensions_of_small_tree():
    t = TreeDesc(((LEAF, 2), (TreeDesc(((LEAF, 1),)), 1)))
    exts = list(linear_extensions(t))
    # 5 nodes: root last, the inner node after its leaf: 4!/2 orders
    assert len(exts) == 12
    assert all(len(e) == 5 and e[-1] == 0 for e in exts)
    assert size(t) == ordinal(5)
