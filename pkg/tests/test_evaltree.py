import json

import pytest

from fel import evaltree
from fel.evaltree import (
    FALSE,
    HOLE,
    TRUE,
    UNDEF,
    Leaf,
    depth,
    iter_subtrees,
    leaf,
    leaf_kinds,
    node,
    render,
    replace_leaves,
    tree_from_json,
    tree_to_json,
)


def test_leaf_constructors():
    assert leaf("T") is TRUE
    assert leaf("D") is HOLE
    with pytest.raises(ValueError):
        leaf("X")
    with pytest.raises(ValueError):
        Leaf("bogus")


def test_hash_consing():
    assert node("a", TRUE, FALSE) is node("a", TRUE, FALSE)


def test_replace_leaves_simultaneous():
    x = node("a", TRUE, FALSE)
    swapped = replace_leaves(x, {"T": FALSE, "F": TRUE})
    assert swapped == node("a", FALSE, TRUE)
    # not sequential: T leaves must not fall through to the F clause
    assert replace_leaves(swapped, {"F": TRUE, "T": FALSE}) == x


def test_replace_leaves_unmapped_stay():
    x = node("a", UNDEF, FALSE)
    assert replace_leaves(x, {"F": TRUE}) == node("a", UNDEF, TRUE)


def test_depth_and_kinds():
    x = node("a", node("b", TRUE, FALSE), FALSE)
    assert depth(x) == 2
    assert depth(TRUE) == 0
    assert leaf_kinds(x) == frozenset(("T", "F"))
    assert leaf_kinds(UNDEF) == frozenset(("U",))


def test_iter_subtrees_children_first_distinct():
    x = node("a", node("b", TRUE, FALSE), node("b", TRUE, FALSE))
    subs = list(iter_subtrees(x))
    assert subs == [TRUE, FALSE, node("b", TRUE, FALSE), x]


def test_json_roundtrip():
    x = node("a", node("b", TRUE, UNDEF), FALSE)
    data = tree_to_json(x)
    assert tree_from_json(data) == x
    assert tree_from_json(json.dumps(data)) == x
    with pytest.raises(ValueError):
        tree_from_json("[1, 2]")
    with pytest.raises(ValueError):
        tree_from_json('{"weird": 1}')


def test_render_ascii():
    x = node("a", TRUE, FALSE)
    assert render(x, "ascii") == "a\n  T\n  F"
    assert render(x, "ascii", middle_u=True) == "a\n  T\n  U\n  F"


def test_render_dot():
    out = render(node("a", TRUE, FALSE), "dot")
    assert out.startswith("digraph")
    assert 'label="a"' in out and 'label="L"' in out and 'label="R"' in out


def test_render_json():
    x = node("a", TRUE, FALSE)
    assert json.loads(render(x, "json")) == tree_to_json(x)
    with pytest.raises(ValueError):
        render(x, "pdf")
