"""Evaluation maps and the per-logic equivalence decision.

Seven logics are supported, from the side-effect-sensitive free logic up to
static (propositional) logic, each defined by structural equality of its
evaluation trees:

  ffel    full evaluation, every atom occurrence evaluated
  ffelu   ffel over three truth values (U aborts evaluation)
  mfel    memorising: repeated atoms keep their first value
  mfelu   mfel with U
  clfel2  memorising and commutative (two-valued)
  clfel   clfel2 with U (U is fully absorptive)
  sfel    static: propositional logic over a fixed alphabet beta
"""

from __future__ import annotations

from dataclasses import dataclass

from . import syntax
from .evaltree import (
    EvalTree,
    FALSE,
    Leaf,
    Node,
    TRUE,
    UNDEF,
    leaf_kinds,
    node,
    replace_leaves,
)

_PLACEHOLDERS = frozenset(("D", "D1", "D2"))


def _check_no_placeholders(x: EvalTree) -> None:
    if leaf_kinds(x) & _PLACEHOLDERS:
        raise ValueError("tree contains placeholder leaves")


# Tree-level composition of the evaluation clauses.  fe / fe_u are thin
# recursions over these; the axiom checker composes trees directly.
_NOT_CACHE: dict[EvalTree, EvalTree] = {}
_TF_CACHE: dict[EvalTree, EvalTree] = {}
_AND_CACHE: dict[tuple, EvalTree] = {}
_OR_CACHE: dict[tuple, EvalTree] = {}


def tree_not(x: EvalTree) -> EvalTree:
    r = _NOT_CACHE.get(x)
    if r is None:
        r = replace_leaves(x, {"T": FALSE, "F": TRUE})
        _NOT_CACHE[x] = r
    return r


def _to_false(x: EvalTree) -> EvalTree:
    r = _TF_CACHE.get(x)
    if r is None:
        r = replace_leaves(x, {"T": FALSE})
        _TF_CACHE[x] = r
    return r


def tree_and(x: EvalTree, y: EvalTree) -> EvalTree:
    key = (x, y)
    r = _AND_CACHE.get(key)
    if r is None:
        r = replace_leaves(x, {"T": y, "F": _to_false(y)})
        _AND_CACHE[key] = r
    return r


def tree_or(x: EvalTree, y: EvalTree) -> EvalTree:
    key = (x, y)
    r = _OR_CACHE.get(key)
    if r is None:
        r = replace_leaves(x, {"T": replace_leaves(y, {"F": TRUE}), "F": y})
        _OR_CACHE[key] = r
    return r


def fe(p: syntax.Expr) -> EvalTree:
    """Full evaluation tree of a U-free expression."""
    if syntax.contains_u(p):
        raise ValueError("fe rejects U; use fe_u")
    return fe_u(p)


def fe_u(p: syntax.Expr) -> EvalTree:
    """Full evaluation tree over three truth values."""
    if isinstance(p, syntax.ConstT):
        return TRUE
    if isinstance(p, syntax.ConstF):
        return FALSE
    if isinstance(p, syntax.ConstU):
        return UNDEF
    if isinstance(p, syntax.Atom):
        return node(p.name, TRUE, FALSE)
    if isinstance(p, syntax.Not):
        return tree_not(fe_u(p.operand))
    if isinstance(p, syntax.FullAnd):
        return tree_and(fe_u(p.left), fe_u(p.right))
    if isinstance(p, syntax.FullOr):
        return tree_or(fe_u(p.left), fe_u(p.right))
    raise TypeError(f"not a closed expression: {p!r}")


_LA_CACHE: dict[tuple, EvalTree] = {}
_RA_CACHE: dict[tuple, EvalTree] = {}
_MEMO_CACHE: dict[EvalTree, EvalTree] = {}


def la(atom: str, x: EvalTree) -> EvalTree:
    """Prune every node labelled atom to its left child."""
    if isinstance(x, Leaf):
        return x
    key = (atom, x)
    r = _LA_CACHE.get(key)
    if r is None:
        if x.atom == atom:
            r = la(atom, x.left)
        else:
            r = node(x.atom, la(atom, x.left), la(atom, x.right))
        _LA_CACHE[key] = r
    return r


def ra(atom: str, x: EvalTree) -> EvalTree:
    """Prune every node labelled atom to its right child."""
    if isinstance(x, Leaf):
        return x
    key = (atom, x)
    r = _RA_CACHE.get(key)
    if r is None:
        if x.atom == atom:
            r = ra(atom, x.right)
        else:
            r = node(x.atom, ra(atom, x.left), ra(atom, x.right))
        _RA_CACHE[key] = r
    return r


def memo(x: EvalTree) -> EvalTree:
    """Memorisation: drop re-evaluations of an atom along each path."""
    _check_no_placeholders(x)
    if isinstance(x, Leaf):
        return x
    r = _MEMO_CACHE.get(x)
    if r is None:
        r = node(x.atom, memo(la(x.atom, x.left)), memo(ra(x.atom, x.right)))
        _MEMO_CACHE[x] = r
    return r


def mfe(p: syntax.Expr) -> EvalTree:
    return memo(fe(p))


def mfe_u(p: syntax.Expr) -> EvalTree:
    return memo(fe_u(p))


def _sorted_alphabet(p: syntax.Expr) -> str:
    return "".join(sorted(syntax.alphabet(p)))


def f_tilde_tree(beta) -> EvalTree:
    """fe of the all-false prefix term over beta: a & (b & ... & F)."""
    t: EvalTree = FALSE
    for a in reversed(syntax.atom_seq(beta)):
        t = node(a, t, t)
    return t


def clfe(p: syntax.Expr) -> EvalTree:
    """Commutative memorising evaluation over the sorted alphabet of p."""
    if syntax.contains_u(p):
        raise ValueError("clfe rejects U; use clfe_u")
    beta = _sorted_alphabet(p)
    return memo(tree_or(f_tilde_tree(beta), fe(p)))


def clfe_u(p: syntax.Expr) -> EvalTree:
    if syntax.contains_u(p):
        return UNDEF
    return clfe(p)


def sfe(beta, p: syntax.Expr) -> EvalTree:
    """Static evaluation: perfect tree over beta, alphabet(p) within beta."""
    if syntax.contains_u(p):
        raise ValueError("sfe rejects U")
    atoms = syntax.atom_seq(beta)
    if len(set(atoms)) != len(atoms):
        raise ValueError(f"alphabet {beta!r} repeats an atom")
    missing = sorted(syntax.alphabet(p) - set(atoms))
    if missing:
        raise ValueError(f"atoms outside the alphabet: {', '.join(missing)}")
    return memo(tree_or(f_tilde_tree(atoms), fe(p)))


@dataclass(frozen=True)
class Logic:
    name: str
    beta: str | None = None

    def __str__(self):
        if self.beta is not None:
            return f"{self.name}({self.beta})"
        return self.name

    @property
    def allows_u(self) -> bool:
        return self.name in ("ffelu", "mfelu", "clfel")


FFEL = Logic("ffel")
FFELU = Logic("ffelu")
MFEL = Logic("mfel")
MFELU = Logic("mfelu")
CLFEL2 = Logic("clfel2")
CLFEL = Logic("clfel")


def SFEL(beta=None) -> Logic:
    if beta is not None:
        beta = "".join(syntax.atom_seq(beta))
    return Logic("sfel", beta)


_LOGIC_NAMES = ("ffel", "ffelu", "mfel", "mfelu", "clfel2", "clfel", "sfel")


def logic_by_name(name: str, beta=None) -> Logic:
    if name not in _LOGIC_NAMES:
        raise ValueError(f"unknown logic {name!r} (expected one of {', '.join(_LOGIC_NAMES)})")
    if name == "sfel":
        return SFEL(beta)
    if beta is not None:
        raise ValueError(f"logic {name} does not take an alphabet")
    return Logic(name)


def evaluate(logic: Logic, p: syntax.Expr, beta=None) -> EvalTree:
    """The evaluation tree of p in the given logic."""
    if not logic.allows_u and syntax.contains_u(p):
        raise ValueError(f"logic {logic} accepts only U-free expressions")
    if logic.name == "ffel":
        return fe(p)
    if logic.name == "ffelu":
        return fe_u(p)
    if logic.name == "mfel":
        return mfe(p)
    if logic.name == "mfelu":
        return mfe_u(p)
    if logic.name == "clfel2":
        return clfe(p)
    if logic.name == "clfel":
        return clfe_u(p)
    if logic.name == "sfel":
        b = beta if beta is not None else logic.beta
        if b is None:
            b = _sorted_alphabet(p)
        return sfe(b, p)
    raise ValueError(f"unknown logic {logic!r}")


@dataclass(frozen=True)
class EquivResult:
    equal: bool
    left_tree: EvalTree
    right_tree: EvalTree

    def __bool__(self):
        return self.equal


def equiv(logic: Logic, p: syntax.Expr, q: syntax.Expr) -> EquivResult:
    """Decide the logic's congruence by comparing evaluation trees."""
    beta = None
    if logic.name == "sfel" and logic.beta is None:
        beta = "".join(sorted(syntax.alphabet(p) | syntax.alphabet(q)))
    tp = evaluate(logic, p, beta)
    tq = evaluate(logic, q, beta)
    return EquivResult(tp == tq, tp, tq)
