"""Axiom tables and semantic validity checking by instance enumeration.

Equations are open terms over the metavariables x, y, z, u, v, w.  An
equation is checked in a logic by substituting closed expressions for
its variables and comparing the two evaluation trees; this replaces
proof search, which is out of scope.  Verdicts therefore never claim
derivability: they are "valid-on-sample" or a concrete counterexample.

The exhaustive strategy enumerates all closed terms up to a syntactic
height bound, deduplicated by the checking logic's own evaluation tree
(sound because the logic's equivalence is a congruence), and caps the
assignment product at a deterministic instance bound.
"""

from __future__ import annotations

import itertools
import random as _random_mod
from dataclasses import dataclass, field

from . import semantics, syntax
from .evaltree import EvalTree, FALSE, Leaf, TRUE, UNDEF, node
from .semantics import Logic, f_tilde_tree, memo, tree_and, tree_not, tree_or
from .syntax import Expr, Var

_VAR_NAMES = ("x", "y", "z", "u", "v", "w")

WITH_U = "with-U"
WITHOUT_U = "without-U"
SHORT_CIRCUIT = "short-circuit"


@dataclass(frozen=True)
class Equation:
    name: str
    lhs: Expr
    rhs: Expr
    signature: str = WITHOUT_U

    def __str__(self):
        return f"{self.name}: {syntax.print_expr(self.lhs)} = {syntax.print_expr(self.rhs)}"


@dataclass(frozen=True)
class AxiomSet:
    name: str
    equations: tuple[Equation, ...]

    def __iter__(self):
        return iter(self.equations)

    def __getitem__(self, name: str) -> Equation:
        for eq in self.equations:
            if eq.name == name:
                return eq
        raise KeyError(name)

    def without(self, name: str) -> "AxiomSet":
        rest = tuple(eq for eq in self.equations if eq.name != name)
        if len(rest) == len(self.equations):
            raise KeyError(name)
        return AxiomSet(f"{self.name}-{name}", rest)


def variables_of(t: Expr) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, syntax.Not):
        return variables_of(t.operand)
    if isinstance(t, (syntax.FullAnd, syntax.FullOr)):
        return variables_of(t.left) | variables_of(t.right)
    return set()


def _to_open(e: Expr) -> Expr:
    """Reread the reserved atom names x,y,z,u,v,w as metavariables."""
    if isinstance(e, syntax.Atom):
        return Var(e.name) if e.name in _VAR_NAMES else e
    if isinstance(e, syntax.Not):
        return syntax.mk_not(_to_open(e.operand))
    if isinstance(e, syntax.FullAnd):
        return syntax.mk_and(_to_open(e.left), _to_open(e.right))
    if isinstance(e, syntax.FullOr):
        return syntax.mk_or(_to_open(e.left), _to_open(e.right))
    return e


def _eq(name: str, lhs: str, rhs: str, signature: str = WITHOUT_U) -> Equation:
    return Equation(name, _to_open(syntax.parse(lhs)), _to_open(syntax.parse(rhs)), signature)


def instantiate(eq: Equation, assignment: dict[str, Expr]) -> tuple[Expr, Expr]:
    """Substitute closed expressions for the variables of both sides."""
    missing = (variables_of(eq.lhs) | variables_of(eq.rhs)) - set(assignment)
    if missing:
        raise ValueError(f"assignment misses variables: {', '.join(sorted(missing))}")

    def subst(t: Expr) -> Expr:
        if isinstance(t, Var):
            return assignment[t.name]
        if isinstance(t, syntax.Not):
            return syntax.mk_not(subst(t.operand))
        if isinstance(t, syntax.FullAnd):
            return syntax.mk_and(subst(t.left), subst(t.right))
        if isinstance(t, syntax.FullOr):
            return syntax.mk_or(subst(t.left), subst(t.right))
        return t

    return subst(eq.lhs), subst(eq.rhs)


# --- the axiom tables ---

_FE = (
    _eq("FFEL1", "F", "!T"),
    _eq("FFEL2", "x | y", "!(!x & !y)"),
    _eq("FFEL3", "!!x", "x"),
    _eq("FFEL4", "(x & y) & z", "x & (y & z)"),
    _eq("FFEL5", "T & x", "x"),
    _eq("FFEL6", "x & T", "x"),
    _eq("FFEL7", "x & F", "F & x"),
    _eq("FFEL8", "!x & F", "x & F"),
    _eq("FFEL9", "(x & F) | y", "(x | T) & y"),
    _eq("FFEL10", "x | (y & F)", "x & (y | T)"),
)

_U1 = _eq("U1", "!U", "U", WITH_U)
_U2 = _eq("U2", "U & x", "U", WITH_U)

_M1 = _eq("M1", "(x | y) & z", "(!x & (y & z)) | (x & z)")
_COMM = _eq("Comm", "x & y", "y & x")
_ANDF = _eq("AndF", "x & F", "F")

EQFFEL = AxiomSet("eqffel", _FE)
EQFFELU = AxiomSet("eqffelu", _FE + (_U1, _U2))
EQMFEL = AxiomSet("eqmfel", _FE + (_M1,))
EQMFELU = AxiomSet("eqmfelu", _FE + (_M1, _U1, _U2))
EQCLFEL2 = AxiomSet("eqclfel2", _FE + (_M1, _COMM))
EQCLFELU = AxiomSet("eqclfelu", _FE + (_M1, _U1, _U2, _COMM))
EQSFEL = AxiomSet("eqsfel", _FE + (_M1, _COMM, _ANDF))

_MF_CORE = (
    _eq("MF1", "x | y", "!(!x & !y)"),
    _eq("MF2", "!!x", "x"),
    _eq("MF3", "T & x", "x"),
    _eq("MF4", "(x | y) & z", "(!x & (y & z)) | (x & z)"),
    _eq("MF5", "(x & y) | x", "x | (y & F)"),
)
MF = AxiomSet("mf", _MF_CORE + (_eq("MF6", "x & (y | z)", "(x & y) | (x & z)"),))
CF = AxiomSet("cf", (_eq("Comm", "x & y", "y & x"),) + _MF_CORE)
SF = AxiomSet("sf", (_eq("AndF", "x & F", "F"),) + _MF_CORE)

EQSSCL = AxiomSet(
    "eqsscl",
    (
        _eq("Mem1", "F", "!T", SHORT_CIRCUIT),
        _eq("Mem2", "x | y", "!(!x & !y)", SHORT_CIRCUIT),
        _eq("Mem3", "T & x", "x", SHORT_CIRCUIT),
        _eq("Mem4", "x & (x | y)", "x", SHORT_CIRCUIT),
        _eq("Mem5", "(x | y) & z", "(!x & (y & z)) | (x & z)", SHORT_CIRCUIT),
        _eq("Comm", "x & y", "y & x", SHORT_CIRCUIT),
    ),
)

BOCHVAR = AxiomSet(
    "bochvar",
    (
        _eq("S1", "!T", "F"),
        _eq("S2", "!U", "U", WITH_U),
        _eq("S3", "!!x", "x"),
        _eq("S4", "!(x & y)", "!x | !y"),
        _eq("S6", "(x & y) & z", "x & (y & z)"),
        _eq("S7", "T & x", "x"),
        _eq("S8", "x | (!x & y)", "x | y"),
        _eq("S9", "x & y", "y & x"),
        _eq("S10", "x & (y | z)", "(x & y) | (x & z)"),
        _eq("S11", "U & x", "U", WITH_U),
    ),
)

LEMMA26 = AxiomSet(
    "lemma26",
    (
        _eq("L26.1", "x & (y & F)", "!x & (y & F)"),
        _eq("L26.2", "(x | T) & y", "!(x | T) | y"),
        _eq("L26.3", "x | (y & (z | T))", "(x | y) & (z | T)"),
    ),
)

C1C4 = AxiomSet(
    "c1c4",
    (
        _eq("C1", "x & (y & x)", "x & y"),
        _eq("C2", "(x & y) | x", "x & (y | x)"),
        _eq("C3", "(x & y) | (!x & z)", "(!x | y) & (x | z)"),
        _eq("C4", "x & (y | z)", "(x & y) | (x & z)"),
    ),
)

CRUX = AxiomSet(
    "crux",
    (
        _eq(
            "HAnd",
            "((x & y) | (!x & z)) & w",
            "(x & ((y | (z & F)) & w)) | (!x & (z & w))",
        ),
        _eq(
            "HOr",
            "((x & y) | (!x & z)) | w",
            "(x & ((y & (z | T)) | w)) | (!x & (z | w))",
        ),
    ),
)

CRUXSWAP = AxiomSet(
    "cruxswap",
    (
        _eq(
            "HSwap",
            "(x & ((y & z) | (!y & u))) | (!x & ((y & v) | (!y & w)))",
            "(y & ((x & z) | (!x & v))) | (!y & ((x & u) | (!x & w)))",
        ),
    ),
)

AUX0 = AxiomSet(
    "aux0",
    (
        _eq("A1", "x | (y & U)", "(x | y) & U", WITH_U),
        _eq("A2", "x | (y & U)", "x & (y & U)", WITH_U),
        _eq("A3", "!x & (y & U)", "x & (y & U)", WITH_U),
    ),
)

LEMMAB = AxiomSet("lemmaB", (_eq("B", "(x & F) | (x & y)", "(x & F) | (y & x)"),))

BUILTIN_SETS: dict[str, AxiomSet] = {
    s.name: s
    for s in (
        EQFFEL, EQFFELU, EQMFEL, EQMFELU, EQCLFEL2, EQCLFELU, EQSFEL,
        MF, CF, SF, EQSSCL, BOCHVAR,
        LEMMA26, C1C4, CRUX, CRUXSWAP, AUX0, LEMMAB,
    )
}

# The logic each built-in set axiomatizes or is a consequence list of.
OWN_LOGIC: dict[str, Logic] = {
    "eqffel": semantics.FFEL,
    "eqffelu": semantics.FFELU,
    "eqmfel": semantics.MFEL,
    "eqmfelu": semantics.MFELU,
    "eqclfel2": semantics.CLFEL2,
    "eqclfelu": semantics.CLFEL,
    "eqsfel": semantics.SFEL(),
    "mf": semantics.MFEL,
    "cf": semantics.CLFEL2,
    "sf": semantics.SFEL(),
    "eqsscl": semantics.SFEL(),
    "bochvar": semantics.CLFEL,
    "lemma26": semantics.FFEL,
    "c1c4": semantics.MFEL,
    "crux": semantics.MFEL,
    "cruxswap": semantics.CLFEL2,
    "aux0": semantics.FFELU,
    "lemmaB": semantics.MFEL,
}


# --- strategies ---

@dataclass(frozen=True)
class Exhaustive:
    atoms: tuple[str, ...] = ("a", "b")
    depth: int = 3
    max_instances: int = 2_000_000


@dataclass(frozen=True)
class Random:
    count: int = 100
    seed: int = 0
    atoms: tuple[str, ...] = ("a", "b")
    height: int = 4


# --- instance evaluation at the tree level ---

_LABELS_CACHE: dict[EvalTree, frozenset] = {}


def _labels(t: EvalTree) -> frozenset:
    r = _LABELS_CACHE.get(t)
    if r is None:
        if isinstance(t, Leaf):
            r = frozenset()
        else:
            r = _labels(t.left) | _labels(t.right) | {t.atom}
        _LABELS_CACHE[t] = r
    return r


def _skeleton_tree(t: Expr, env: dict[str, EvalTree]) -> EvalTree:
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, syntax.Atom):
        return node(t.name, TRUE, FALSE)
    if isinstance(t, syntax.ConstT):
        return TRUE
    if isinstance(t, syntax.ConstF):
        return FALSE
    if isinstance(t, syntax.ConstU):
        return UNDEF
    if isinstance(t, syntax.Not):
        return tree_not(_skeleton_tree(t.operand, env))
    if isinstance(t, syntax.FullAnd):
        return tree_and(_skeleton_tree(t.left, env), _skeleton_tree(t.right, env))
    if isinstance(t, syntax.FullOr):
        return tree_or(_skeleton_tree(t.left, env), _skeleton_tree(t.right, env))
    raise TypeError(f"not an open term: {t!r}")


def _side_has_u(t: Expr, env_u: dict[str, bool]) -> bool:
    if isinstance(t, Var):
        return env_u[t.name]
    if isinstance(t, syntax.ConstU):
        return True
    if isinstance(t, syntax.Not):
        return _side_has_u(t.operand, env_u)
    if isinstance(t, (syntax.FullAnd, syntax.FullOr)):
        return _side_has_u(t.left, env_u) or _side_has_u(t.right, env_u)
    return False


def _finish(logic: Logic, tree: EvalTree, has_u: bool, beta=None) -> EvalTree:
    name = logic.name
    if name in ("ffel", "ffelu"):
        return tree
    if name in ("mfel", "mfelu"):
        return memo(tree)
    if name == "clfel2":
        return memo(tree_or(f_tilde_tree(sorted(_labels(tree))), tree))
    if name == "clfel":
        if has_u:
            return UNDEF
        return memo(tree_or(f_tilde_tree(sorted(_labels(tree))), tree))
    if name == "sfel":
        if beta is None:
            beta = sorted(_labels(tree))
        return memo(tree_or(f_tilde_tree(beta), tree))
    raise ValueError(f"unknown logic {logic!r}")


def _check_instance(logic, eq, trees, has_us, beta_fixed):
    lt = _skeleton_tree(eq.lhs, trees)
    rt = _skeleton_tree(eq.rhs, trees)
    lu = _side_has_u(eq.lhs, has_us)
    ru = _side_has_u(eq.rhs, has_us)
    beta = beta_fixed
    if logic.name == "sfel" and beta is None:
        beta = sorted(_labels(lt) | _labels(rt))
    return _finish(logic, lt, lu, beta), _finish(logic, rt, ru, beta)


# --- closed-term universes and their per-logic quotients ---

_UNIVERSE_CACHE: dict[tuple, list[Expr]] = {}
_CLASS_CACHE: dict[tuple, list] = {}


def _universe(atoms: tuple[str, ...], depth: int, allow_u: bool) -> list[Expr]:
    key = (atoms, depth, allow_u)
    terms = _UNIVERSE_CACHE.get(key)
    if terms is not None:
        return terms
    leaves: list[Expr] = [syntax.mk_atom(a) for a in atoms] + [syntax.TRUE, syntax.FALSE]
    if allow_u:
        leaves.append(syntax.UNDEF)
    exact = [list(leaves)]  # exact[k] = terms of height k+1
    for h in range(2, depth + 1):
        upto_prev = [t for lvl in exact for t in lvl]
        prev = exact[-1]
        below = [t for lvl in exact[:-1] for t in lvl]
        level: list[Expr] = [syntax.mk_not(t) for t in prev]
        for l, r in itertools.chain(
            itertools.product(prev, upto_prev), itertools.product(below, prev)
        ):
            level.append(syntax.mk_and(l, r))
            level.append(syntax.mk_or(l, r))
        exact.append(level)
    terms = [t for lvl in exact for t in lvl]
    _UNIVERSE_CACHE[key] = terms
    return terms


def _classes(logic: Logic, atoms: tuple[str, ...], depth: int, allow_u: bool):
    """One smallest representative per logic-equivalence class of the universe."""
    key = (logic.name, logic.beta, atoms, depth, allow_u)
    reps = _CLASS_CACHE.get(key)
    if reps is not None:
        return reps
    seen = {}
    for t in _universe(atoms, depth, allow_u):
        tree = semantics.fe_u(t)
        has_u = syntax.contains_u(t)
        k = _finish(logic, tree, has_u, logic.beta)
        if k not in seen:
            seen[k] = (t, tree, has_u)
    reps = list(seen.values())
    _CLASS_CACHE[key] = reps
    return reps


def _random_term(rng, atoms, allow_u: bool, height: int) -> Expr:
    if height <= 1 or rng.random() < 0.3:
        pool = list(atoms) + ["T", "F"] + (["U"] if allow_u else [])
        c = rng.choice(pool)
        if c == "T":
            return syntax.TRUE
        if c == "F":
            return syntax.FALSE
        if c == "U":
            return syntax.UNDEF
        return syntax.mk_atom(c)
    k = rng.randrange(3)
    if k == 0:
        return syntax.mk_not(_random_term(rng, atoms, allow_u, height - 1))
    l = _random_term(rng, atoms, allow_u, height - 1)
    r = _random_term(rng, atoms, allow_u, height - 1)
    return syntax.mk_and(l, r) if k == 1 else syntax.mk_or(l, r)


# --- verdicts ---

@dataclass
class Verdict:
    status: str  # "valid-on-sample" | "counterexample"
    equation: Equation
    instances: int
    assignment: dict[str, Expr] | None = None
    left_tree: EvalTree | None = None
    right_tree: EvalTree | None = None
    note: str = ""

    def __bool__(self):
        return self.status == "valid-on-sample"


@dataclass
class Report:
    set_name: str
    logic: Logic
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def all_valid(self) -> bool:
        return all(self.verdicts)

    def __iter__(self):
        return iter(self.verdicts)


def check_validity(logic: Logic, eq: Equation, strategy) -> Verdict:
    """Check one equation on closed instances; never claims derivability."""
    if eq.signature == WITH_U and not logic.allows_u:
        raise ValueError(f"equation {eq.name} needs U, which {logic} lacks")
    names = sorted(variables_of(eq.lhs) | variables_of(eq.rhs))
    allow_u = logic.allows_u

    if isinstance(strategy, Exhaustive):
        atoms = syntax.atom_seq(strategy.atoms)
        reps = _classes(logic, atoms, strategy.depth, allow_u)
        note = ""
        if names and len(reps) ** len(names) > strategy.max_instances:
            cap = max(1, int(strategy.max_instances ** (1.0 / len(names))))
            reps = reps[:cap]
            note = f"truncated to {cap} classes per variable"
        checked = 0
        for combo in itertools.product(reps, repeat=len(names)):
            trees = {n: c[1] for n, c in zip(names, combo)}
            has_us = {n: c[2] for n, c in zip(names, combo)}
            lt, rt = _check_instance(logic, eq, trees, has_us, logic.beta)
            checked += 1
            if lt != rt:
                return Verdict(
                    "counterexample", eq, checked,
                    {n: c[0] for n, c in zip(names, combo)}, lt, rt, note,
                )
        return Verdict("valid-on-sample", eq, checked, note=note)

    if isinstance(strategy, Random):
        rng = _random_mod.Random(strategy.seed)
        atoms = syntax.atom_seq(strategy.atoms)
        for i in range(strategy.count):
            assignment = {
                n: _random_term(rng, atoms, allow_u, strategy.height) for n in names
            }
            trees = {n: semantics.fe_u(t) for n, t in assignment.items()}
            has_us = {n: syntax.contains_u(t) for n, t in assignment.items()}
            lt, rt = _check_instance(logic, eq, trees, has_us, logic.beta)
            if lt != rt:
                return Verdict("counterexample", eq, i + 1, assignment, lt, rt)
        return Verdict("valid-on-sample", eq, strategy.count)

    raise TypeError(f"unknown strategy {strategy!r}")


def check_set(logic: Logic, axset: AxiomSet, strategy) -> Report:
    """Check every equation of a set; first counterexample per equation."""
    report = Report(axset.name, logic)
    for eq in axset:
        report.verdicts.append(check_validity(logic, eq, strategy))
    return report
