"""Expression AST, parser, printer, and small syntactic transforms.

Concrete syntax: `&` is full and, `|` is full or (both evaluate their right
argument no matter what the left yielded), `!` is negation and binds
tightest, `T`/`F`/`U` are the constants.  `&` binds tighter than `|`, both
are left-associative.  Atoms match [a-z][a-z0-9_]*.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class Expr:
    """Base class of all expression nodes."""

    def __repr__(self):
        return f"<expr {print_expr(self)}>"


@dataclass(frozen=True, eq=False, repr=False)
class Atom(Expr):
    name: str

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Atom) and self.name == other.name

    def __hash__(self):
        return hash(("atom", self.name))


@dataclass(frozen=True, eq=False, repr=False)
class ConstT(Expr):
    def __eq__(self, other):
        return isinstance(other, ConstT)

    def __hash__(self):
        return hash("constT")


@dataclass(frozen=True, eq=False, repr=False)
class ConstF(Expr):
    def __eq__(self, other):
        return isinstance(other, ConstF)

    def __hash__(self):
        return hash("constF")


@dataclass(frozen=True, eq=False, repr=False)
class ConstU(Expr):
    def __eq__(self, other):
        return isinstance(other, ConstU)

    def __hash__(self):
        return hash("constU")


@dataclass(frozen=True, eq=False, repr=False)
class Not(Expr):
    operand: Expr

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Not) and self.operand == other.operand

    def __hash__(self):
        h = getattr(self, "_hash", None)
        if h is None:
            h = hash(("not", self.operand))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True, eq=False, repr=False)
class FullAnd(Expr):
    left: Expr
    right: Expr

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, FullAnd)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        h = getattr(self, "_hash", None)
        if h is None:
            h = hash(("and", self.left, self.right))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True, eq=False, repr=False)
class FullOr(Expr):
    left: Expr
    right: Expr

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, FullOr)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        h = getattr(self, "_hash", None)
        if h is None:
            h = hash(("or", self.left, self.right))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True, eq=False, repr=False)
class Var(Expr):
    """Metavariable of an open term (used by the axioms module only)."""

    name: str

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Var) and self.name == other.name

    def __hash__(self):
        return hash(("var", self.name))


TRUE = ConstT()
FALSE = ConstF()
UNDEF = ConstU()

# Interning constructors.  Equal expressions built through these share
# identity, which makes the structural __eq__ fast paths and the caches in
# the other modules effective.  Plain constructors remain valid.
_ATOMS: dict[str, Atom] = {}
_NOTS: dict[Expr, Not] = {}
_ANDS: dict[tuple, FullAnd] = {}
_ORS: dict[tuple, FullOr] = {}

_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def mk_atom(name: str) -> Atom:
    e = _ATOMS.get(name)
    if e is None:
        if not _ATOM_RE.match(name):
            raise ValueError(f"invalid atom name {name!r}")
        e = Atom(name)
        _ATOMS[name] = e
    return e


def mk_not(operand: Expr) -> Not:
    e = _NOTS.get(operand)
    if e is None:
        e = Not(operand)
        _NOTS[operand] = e
    return e


def mk_and(left: Expr, right: Expr) -> FullAnd:
    key = (left, right)
    e = _ANDS.get(key)
    if e is None:
        e = FullAnd(left, right)
        _ANDS[key] = e
    return e


def mk_or(left: Expr, right: Expr) -> FullOr:
    key = (left, right)
    e = _ORS.get(key)
    if e is None:
        e = FullOr(left, right)
        _ORS[key] = e
    return e


class ParseError(ValueError):
    def __init__(self, offset: int, expected: Iterable[str]):
        self.offset = offset
        self.expected = sorted(set(expected))
        super().__init__(
            f"syntax error at byte {offset}: expected {', '.join(self.expected)}"
        )


_TOKEN_RE = re.compile(r"\s*(?:([a-z][a-z0-9_]*)|([TFU])|([&|!()])|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        at = m.start(m.lastindex)
        if m.group(4):
            raise ParseError(at, ["a token"])
        if m.group(1):
            tokens.append(("atom", m.group(1), at))
        elif m.group(2):
            tokens.append(("const", m.group(2), at))
        else:
            tokens.append((m.group(3), m.group(3), at))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse(text: str) -> Expr:
    """Parse concrete syntax into an Expr; ParseError carries byte offset."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    def expr():
        e = conjunction()
        while peek()[0] == "|":
            take()
            e = mk_or(e, conjunction())
        return e

    def conjunction():
        e = unary()
        while peek()[0] == "&":
            take()
            e = mk_and(e, unary())
        return e

    def unary():
        kind, _, _ = peek()
        if kind == "!":
            take()
            return mk_not(unary())
        return primary()

    def primary():
        kind, value, at = take()
        if kind == "atom":
            return mk_atom(value)
        if kind == "const":
            return {"T": TRUE, "F": FALSE, "U": UNDEF}[value]
        if kind == "(":
            e = expr()
            kind2, _, at2 = take()
            if kind2 != ")":
                raise ParseError(at2, ["')'", "'&'", "'|'"])
            return e
        raise ParseError(at, ["'T'", "'F'", "'U'", "an atom", "'!'", "'('"])

    e = expr()
    kind, _, at = peek()
    if kind != "end":
        raise ParseError(at, ["'&'", "'|'", "end of input"])
    return e


_PREC_OR, _PREC_AND, _PREC_NOT, _PREC_PRIMARY = 1, 2, 3, 4


def print_expr(e: Expr, fully_parenthesized: bool = False) -> str:
    """Print with minimal parentheses; parse(print_expr(e)) == e."""

    def go(e: Expr, need: int) -> str:
        if isinstance(e, Atom):
            return e.name
        if isinstance(e, Var):
            return e.name
        if isinstance(e, ConstT):
            return "T"
        if isinstance(e, ConstF):
            return "F"
        if isinstance(e, ConstU):
            return "U"
        if isinstance(e, Not):
            s, p = "!" + go(e.operand, _PREC_NOT), _PREC_NOT
        elif isinstance(e, FullAnd):
            s = go(e.left, _PREC_AND) + " & " + go(e.right, _PREC_NOT)
            p = _PREC_AND
        elif isinstance(e, FullOr):
            s = go(e.left, _PREC_OR) + " | " + go(e.right, _PREC_AND)
            p = _PREC_OR
        else:
            raise TypeError(f"not an expression: {e!r}")
        if p < need or (fully_parenthesized and not isinstance(e, Not)):
            return "(" + s + ")"
        return s

    return go(e, 0)


def alphabet(e: Expr) -> set[str]:
    """The set of atoms occurring in e."""
    if isinstance(e, Atom):
        return {e.name}
    if isinstance(e, (ConstT, ConstF, ConstU)):
        return set()
    if isinstance(e, Not):
        return alphabet(e.operand)
    if isinstance(e, (FullAnd, FullOr)):
        return alphabet(e.left) | alphabet(e.right)
    raise TypeError(f"not a closed expression: {e!r}")


def contains_u(e: Expr) -> bool:
    if isinstance(e, ConstU):
        return True
    if isinstance(e, Not):
        return contains_u(e.operand)
    if isinstance(e, (FullAnd, FullOr)):
        return contains_u(e.left) or contains_u(e.right)
    return False


def atom_seq(sigma) -> tuple[str, ...]:
    """Normalize an atom string: a str is one atom per character."""
    if isinstance(sigma, str):
        return tuple(sigma)
    return tuple(sigma)


def seq_filter(sigma, rho) -> str:
    """Append to sigma the atoms of rho that sigma does not already have."""
    out = list(atom_seq(sigma))
    have = set(out)
    for a in atom_seq(rho):
        if a not in have:
            out.append(a)
            have.add(a)
    return "".join(out)


def str_of(e: Expr) -> str:
    """First-occurrence atom string of e, left to right, no repeats."""
    if isinstance(e, (ConstT, ConstF, ConstU)):
        return ""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Not):
        return str_of(e.operand)
    if isinstance(e, (FullAnd, FullOr)):
        return seq_filter(str_of(e.left), str_of(e.right))
    raise TypeError(f"not a closed expression: {e!r}")


def nnf(e: Expr) -> Expr:
    """Push negations down to atoms; !U stays U, !!P collapses."""
    if isinstance(e, (Atom, ConstT, ConstF, ConstU)):
        return e
    if isinstance(e, FullAnd):
        return mk_and(nnf(e.left), nnf(e.right))
    if isinstance(e, FullOr):
        return mk_or(nnf(e.left), nnf(e.right))
    if isinstance(e, Not):
        q = e.operand
        if isinstance(q, Atom):
            return mk_not(q)
        if isinstance(q, ConstT):
            return FALSE
        if isinstance(q, ConstF):
            return TRUE
        if isinstance(q, ConstU):
            return UNDEF
        if isinstance(q, Not):
            return nnf(q.operand)
        if isinstance(q, FullAnd):
            return mk_or(nnf(mk_not(q.left)), nnf(mk_not(q.right)))
        if isinstance(q, FullOr):
            return mk_and(nnf(mk_not(q.left)), nnf(mk_not(q.right)))
    raise TypeError(f"not a closed expression: {e!r}")


def dual(e: Expr) -> Expr:
    """Swap & with | and T with F; atoms, variables, !, U are self-dual."""
    if isinstance(e, (Atom, Var, ConstU)):
        return e
    if isinstance(e, ConstT):
        return FALSE
    if isinstance(e, ConstF):
        return TRUE
    if isinstance(e, Not):
        return mk_not(dual(e.operand))
    if isinstance(e, FullAnd):
        return mk_or(dual(e.left), dual(e.right))
    if isinstance(e, FullOr):
        return mk_and(dual(e.left), dual(e.right))
    raise TypeError(f"not a closed expression: {e!r}")
