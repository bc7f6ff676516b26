import pytest
from hypothesis import given

from fel import semantics, syntax
from fel.evaltree import FALSE, TRUE, UNDEF, Leaf, depth, leaf_kinds, node
from fel.semantics import (
    CLFEL,
    CLFEL2,
    FFEL,
    FFELU,
    MFEL,
    MFELU,
    SFEL,
    clfe,
    clfe_u,
    equiv,
    evaluate,
    f_tilde_tree,
    fe,
    fe_u,
    la,
    logic_by_name,
    memo,
    mfe,
    mfe_u,
    ra,
    sfe,
)

from test_syntax import exprs

P = syntax.parse


def test_fe_atoms_and_constants():
    assert fe(P("a")) == node("a", TRUE, FALSE)
    assert fe(P("T")) is TRUE
    assert fe(P("F")) is FALSE


def test_fe_worked_examples():
    expected = node("b", node("a", FALSE, FALSE), node("a", TRUE, FALSE))
    assert fe(P("!b & a")) == expected
    assert fe(P("!(b | !a)")) == expected


def test_fe_rejects_u():
    with pytest.raises(ValueError):
        fe(P("U"))
    with pytest.raises(ValueError):
        fe(P("a & U"))


def test_fe_u_examples():
    assert fe_u(P("a & U")) == node("a", UNDEF, UNDEF)
    assert fe_u(P("(a | T) & b")) == node(
        "a", node("b", TRUE, FALSE), node("b", TRUE, FALSE)
    )
    assert fe_u(P("U")) is UNDEF


@given(exprs(allow_u=False))
def test_fe_not_is_swap(e):
    from fel.evaltree import replace_leaves

    assert fe(syntax.mk_not(e)) == replace_leaves(fe(e), {"T": FALSE, "F": TRUE})


def _atom_occurrences(e):
    if isinstance(e, syntax.Atom):
        return 1
    if isinstance(e, syntax.Not):
        return _atom_occurrences(e.operand)
    if isinstance(e, (syntax.FullAnd, syntax.FullOr)):
        return _atom_occurrences(e.left) + _atom_occurrences(e.right)
    return 0


@given(exprs(allow_u=False))
def test_fe_depth_is_atom_occurrences(e):
    assert depth(fe(e)) == _atom_occurrences(e)


def test_la_ra():
    x = node("a", node("a", TRUE, FALSE), node("b", node("a", TRUE, FALSE), FALSE))
    assert la("a", x) == TRUE
    assert ra("a", x) == node("b", FALSE, FALSE)
    assert la("c", x) == x


def test_memo_examples():
    assert mfe(P("a & a")) == node("a", TRUE, FALSE)
    assert mfe(P("a | !a")) == node("a", TRUE, TRUE)
    assert mfe(P("(a & b) | (!a & !b)")) == node(
        "a", node("b", TRUE, FALSE), node("b", FALSE, TRUE)
    )
    assert mfe_u(P("b & (U | T)")) == node("b", UNDEF, UNDEF)


def _paths(t, acc=()):
    if isinstance(t, Leaf):
        yield acc
    else:
        yield from _paths(t.left, acc + (t.atom,))
        yield from _paths(t.right, acc + (t.atom,))


@given(exprs(allow_u=False))
def test_memo_idempotent_and_no_repeats(e):
    t = mfe(e)
    assert memo(t) == t
    for path in _paths(t):
        assert len(set(path)) == len(path)


@given(exprs(allow_u=False))
def test_mfe_perfect_over_str_of(e):
    sigma = syntax.str_of(e)
    for path in _paths(mfe(e)):
        assert "".join(path) == sigma


def test_memo_rejects_placeholders():
    with pytest.raises(ValueError):
        memo(node("a", Leaf("D"), FALSE))


def test_f_tilde_tree():
    assert f_tilde_tree("") is FALSE
    assert f_tilde_tree("ab") == node("a", node("b", FALSE, FALSE), node("b", FALSE, FALSE))


def test_clfe_examples():
    assert clfe(P("b & a")) == mfe(P("a & b"))
    assert clfe(P("(b | a) & b")) == mfe(P("(a | T) & b"))
    with pytest.raises(ValueError):
        clfe(P("a & U"))


def test_clfe_u_collapses_u():
    assert clfe_u(P("U & a")) is UNDEF
    assert clfe_u(P("a & b")) == clfe(P("a & b"))


def test_sfe_examples():
    assert sfe("ab", P("T")) == node(
        "a", node("b", TRUE, TRUE), node("b", TRUE, TRUE)
    )
    assert sfe("ab", P("a")) == node(
        "a", node("b", TRUE, TRUE), node("b", FALSE, FALSE)
    )
    assert sfe("ab", P("b")) == node(
        "a", node("b", TRUE, FALSE), node("b", TRUE, FALSE)
    )


def test_sfe_validates_alphabet():
    with pytest.raises(ValueError):
        sfe("aa", P("a"))
    with pytest.raises(ValueError) as e:
        sfe("a", P("a & b & c"))
    assert "b" in str(e.value) and "c" in str(e.value)
    with pytest.raises(ValueError):
        sfe("ab", P("U"))


def test_logic_by_name():
    assert logic_by_name("ffel") == FFEL
    assert logic_by_name("sfel", "ab").beta == "ab"
    with pytest.raises(ValueError):
        logic_by_name("boolean")
    with pytest.raises(ValueError):
        logic_by_name("ffel", "ab")


def test_evaluate_u_gate():
    with pytest.raises(ValueError):
        evaluate(FFEL, P("a & U"))
    assert evaluate(FFELU, P("a & U")) == node("a", UNDEF, UNDEF)
    assert evaluate(CLFEL, P("a & U")) is UNDEF


def test_equiv_verdicts():
    assert equiv(CLFEL2, P("a & b"), P("b & a"))
    r = equiv(FFEL, P("a & a"), P("a"))
    assert not r
    assert r.left_tree != r.right_tree


def test_equiv_sfel_default_beta_is_union():
    # x & F vs F: distinct alphabets, the union must be used on both sides
    assert equiv(SFEL(), P("a & F"), P("F"))
    assert equiv(SFEL(), P("a"), P("a & (b | !b)"))


@given(exprs(allow_u=False, atoms=("a", "b")))
def test_hierarchy_on_single_expressions(e):
    # each logic's tree is a function of the previous one's
    assert memo(fe(e)) == mfe(e)
    assert memo(semantics.tree_or(f_tilde_tree(sorted(syntax.alphabet(e))), fe(e))) == clfe(e)
