"""Binary evaluation trees with leaf substitution and rendering.

An evaluation tree is the semantic value of a left-sequential expression:
internal nodes are labelled with atoms, the left child is taken when the
atom evaluates true, the right child when it evaluates false.  Leaves are
truth values T/F, the undefinedness marker U, or the placeholders D, D1, D2
used by tree decompositions.  For three-valued trees the middle (undefined)
branch is always the leaf U and is therefore not stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping

LEAF_KINDS = ("T", "F", "U", "D", "D1", "D2")


class EvalTree:
    """Base class of Leaf and Node."""

    def __repr__(self):
        return render(self, "ascii").replace("\n", " ")


@dataclass(frozen=True, eq=False, repr=False)
class Leaf(EvalTree):
    kind: str

    def __post_init__(self):
        if self.kind not in LEAF_KINDS:
            raise ValueError(f"unknown leaf kind {self.kind!r}")

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Leaf) and self.kind == other.kind

    def __hash__(self):
        return hash(("leaf", self.kind))


@dataclass(frozen=True, eq=False, repr=False)
class Node(EvalTree):
    atom: str
    left: EvalTree
    right: EvalTree

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Node)
            and self.atom == other.atom
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        h = getattr(self, "_hash", None)
        if h is None:
            h = hash((self.atom, self.left, self.right))
            object.__setattr__(self, "_hash", h)
        return h


# Trees are hash-consed through these constructors, so equal trees built by
# library code are usually the same object and share all their subtrees.
_LEAVES = {kind: Leaf(kind) for kind in LEAF_KINDS}
_NODES: dict[tuple, Node] = {}

TRUE = _LEAVES["T"]
FALSE = _LEAVES["F"]
UNDEF = _LEAVES["U"]
HOLE = _LEAVES["D"]
HOLE1 = _LEAVES["D1"]
HOLE2 = _LEAVES["D2"]


def leaf(kind: str) -> Leaf:
    try:
        return _LEAVES[kind]
    except KeyError:
        raise ValueError(f"unknown leaf kind {kind!r}") from None


def node(atom: str, left: EvalTree, right: EvalTree) -> Node:
    key = (atom, left, right)
    t = _NODES.get(key)
    if t is None:
        t = Node(atom, left, right)
        _NODES[key] = t
    return t


def replace_leaves(x: EvalTree, mapping: Mapping[str, EvalTree]) -> EvalTree:
    """Simultaneously replace leaf kinds by trees; unmapped kinds stay."""
    memo: dict[EvalTree, EvalTree] = {}

    def go(t: EvalTree) -> EvalTree:
        r = memo.get(t)
        if r is None:
            if isinstance(t, Leaf):
                r = mapping.get(t.kind, t)
            else:
                r = node(t.atom, go(t.left), go(t.right))
            memo[t] = r
        return r

    return go(x)


def depth(x: EvalTree) -> int:
    memo: dict[EvalTree, int] = {}

    def go(t: EvalTree) -> int:
        d = memo.get(t)
        if d is None:
            d = 0 if isinstance(t, Leaf) else 1 + max(go(t.left), go(t.right))
            memo[t] = d
        return d

    return go(x)


def leaf_kinds(x: EvalTree) -> frozenset[str]:
    """The exact set of leaf kinds occurring in x (cached on the tree)."""
    ks = getattr(x, "_kinds", None)
    if ks is None:
        if isinstance(x, Leaf):
            ks = frozenset((x.kind,))
        else:
            ks = leaf_kinds(x.left) | leaf_kinds(x.right)
        object.__setattr__(x, "_kinds", ks)
    return ks


def iter_subtrees(x: EvalTree) -> Iterator[EvalTree]:
    """All distinct subtrees of x, children before parents."""
    seen: set[EvalTree] = set()

    def go(t: EvalTree) -> Iterator[EvalTree]:
        if t in seen:
            return
        seen.add(t)
        if isinstance(t, Node):
            yield from go(t.left)
            yield from go(t.right)
        yield t

    yield from go(x)


def tree_to_json(x: EvalTree) -> dict:
    if isinstance(x, Leaf):
        return {"leaf": x.kind}
    return {
        "atom": x.atom,
        "left": tree_to_json(x.left),
        "right": tree_to_json(x.right),
    }


def tree_from_json(data) -> EvalTree:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("tree JSON must be an object")
    if "leaf" in data:
        return leaf(data["leaf"])
    if "atom" in data:
        return node(
            data["atom"],
            tree_from_json(data["left"]),
            tree_from_json(data["right"]),
        )
    raise ValueError("tree JSON object needs a 'leaf' or 'atom' key")


def render(x: EvalTree, format: str = "ascii", middle_u: bool = False) -> str:
    """Render a tree as indented ascii, graphviz dot, or json.

    With middle_u the ascii form also shows the implicit undefined branch
    of every node, which is always the leaf U.
    """
    if format == "json":
        return json.dumps(tree_to_json(x))
    if format == "dot":
        lines = ["digraph evaltree {"]
        counter = 0

        def go(t: EvalTree) -> int:
            nonlocal counter
            me = counter
            counter += 1
            label = t.kind if isinstance(t, Leaf) else t.atom
            lines.append(f'  n{me} [label="{label}"];')
            if isinstance(t, Node):
                lines.append(f'  n{me} -> n{go(t.left)} [label="L"];')
                lines.append(f'  n{me} -> n{go(t.right)} [label="R"];')
            return me

        go(x)
        lines.append("}")
        return "\n".join(lines)
    if format == "ascii":
        lines: list[str] = []

        def go(t: EvalTree, indent: int) -> None:
            pad = "  " * indent
            if isinstance(t, Leaf):
                lines.append(pad + t.kind)
            else:
                lines.append(pad + t.atom)
                go(t.left, indent + 1)
                if middle_u:
                    lines.append("  " * (indent + 1) + "U")
                go(t.right, indent + 1)

        go(x, 0)
        return "\n".join(lines)
    raise ValueError(f"unknown render format {format!r}")
