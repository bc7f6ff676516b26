"""Command-line front end.

Exit codes: 0 for success / equivalent / valid, 1 for inequivalent /
counterexample / no model, 2 for usage or input errors.  Verdicts and
machine-readable output go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import sys

import click

from . import axioms, fnf, invert, models, normalforms, scl, semantics, syntax


def _parse_expr(text: str) -> syntax.Expr:
    try:
        return syntax.parse(text)
    except syntax.ParseError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)


def _logic(name: str, beta: str | None) -> semantics.Logic:
    try:
        return semantics.logic_by_name(name, beta)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)


_LOGIC_CHOICE = click.Choice(["ffel", "ffelu", "mfel", "mfelu", "clfel2", "clfel", "sfel"])


@click.group()
def main():
    """Evaluation trees and normal forms for left-sequential logics."""


@main.command()
@click.argument("expr")
@click.option("--fully-parenthesized", is_flag=True)
def parse(expr, fully_parenthesized):
    """Parse EXPR and print it back."""
    e = _parse_expr(expr)
    click.echo(syntax.print_expr(e, fully_parenthesized=fully_parenthesized))


@main.command()
@click.option("--logic", "logic_name", type=_LOGIC_CHOICE, default="ffel", show_default=True)
@click.option("--alphabet", default=None, help="Atom string for sfel.")
@click.option("--format", "fmt", type=click.Choice(["ascii", "dot", "json"]), default="ascii")
@click.argument("expr")
def tree(logic_name, alphabet, fmt, expr):
    """Print the evaluation tree of EXPR in a logic."""
    logic = _logic(logic_name, alphabet)
    e = _parse_expr(expr)
    try:
        t = semantics.evaluate(logic, e)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    click.echo(evaltree_render(t, fmt))


def evaltree_render(t, fmt):
    from . import evaltree

    return evaltree.render(t, fmt)


@main.command()
@click.option("--logic", "logic_name", type=_LOGIC_CHOICE, default="ffel", show_default=True)
@click.option("--alphabet", default=None, help="Atom string for sfel.")
@click.argument("expr1")
@click.argument("expr2")
def equiv(logic_name, alphabet, expr1, expr2):
    """Decide whether two expressions are equivalent in a logic."""
    logic = _logic(logic_name, alphabet)
    e1, e2 = _parse_expr(expr1), _parse_expr(expr2)
    try:
        result = semantics.equiv(logic, e1, e2)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    if result:
        click.echo("equivalent")
        return
    from . import evaltree

    click.echo("NOT equivalent")
    click.echo("left tree:")
    click.echo(evaltree.render(result.left_tree, "ascii"))
    click.echo("right tree:")
    click.echo(evaltree.render(result.right_tree, "ascii"))
    sys.exit(1)


@main.command()
@click.option("--logic", "logic_name", type=_LOGIC_CHOICE, default="ffel", show_default=True)
@click.option("--fully-parenthesized", is_flag=True)
@click.argument("expr")
def normalize(logic_name, fully_parenthesized, expr):
    """Print the normal form of EXPR in a logic."""
    e = _parse_expr(expr)
    try:
        if logic_name == "ffel":
            out = fnf.normalize_ffel(e)
        elif logic_name == "ffelu":
            out = fnf.normalize_ffelu(e)
        elif logic_name == "mfel":
            out = normalforms.normalize_mfel(e).body
        elif logic_name == "mfelu":
            out = normalforms.normalize_mfelu(e).body
        elif logic_name == "clfel2":
            out = normalforms.normalize_clfel2(e).body
        elif logic_name == "clfel":
            out = normalforms.normalize_clfelu(e).body
        else:
            click.echo("error: sfel has no normal forms; compare trees instead", err=True)
            sys.exit(2)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    click.echo(syntax.print_expr(out, fully_parenthesized=fully_parenthesized))


@main.command(name="invert")
@click.option("--fully-parenthesized", is_flag=True)
@click.argument("tree_json")
def invert_cmd(fully_parenthesized, tree_json):
    """Reconstruct the normal-form term of an evaluation tree (JSON)."""
    from . import evaltree

    try:
        t = evaltree.tree_from_json(tree_json)
    except (ValueError, KeyError) as err:
        click.echo(f"error: bad tree JSON: {err}", err=True)
        sys.exit(2)
    try:
        e = invert.g(t)
    except invert.NotInImage as err:
        click.echo(f"not in image: {err}")
        sys.exit(1)
    click.echo(syntax.print_expr(e, fully_parenthesized=fully_parenthesized))


def _parse_kv(text: str, spec: dict) -> dict:
    out = dict()
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        k = k.strip()
        if k not in spec:
            raise ValueError(f"unknown key {k!r} (expected {', '.join(spec)})")
        out[k] = int(v)
    return out


@main.command(name="axioms")
@click.option("--logic", "logic_name", type=_LOGIC_CHOICE, default=None,
              help="Defaults to the set's own logic.")
@click.option("--set", "set_name", required=True)
@click.option("--exhaustive", "exhaustive_opt", default=None, metavar="atoms=K,depth=D")
@click.option("--random", "random_opt", default=None, metavar="n=N,seed=S")
def axioms_cmd(logic_name, set_name, exhaustive_opt, random_opt):
    """Check an axiom set on closed instances."""
    axset = axioms.BUILTIN_SETS.get(set_name)
    if axset is None:
        click.echo(f"error: unknown set {set_name!r} (expected one of "
                   f"{', '.join(sorted(axioms.BUILTIN_SETS))})", err=True)
        sys.exit(2)
    logic = axioms.OWN_LOGIC[set_name] if logic_name is None else _logic(logic_name, None)
    try:
        if exhaustive_opt and random_opt:
            raise ValueError("choose one of --exhaustive and --random")
        if random_opt:
            kv = _parse_kv(random_opt, {"n": int, "seed": int})
            strategy = axioms.Random(count=kv.get("n", 100), seed=kv.get("seed", 0))
        else:
            kv = _parse_kv(exhaustive_opt, {"atoms": int, "depth": int}) if exhaustive_opt else {}
            natoms = kv.get("atoms", 2)
            strategy = axioms.Exhaustive(
                atoms=tuple("abcdefgh"[:natoms]), depth=kv.get("depth", 3)
            )
        report = axioms.check_set(logic, axset, strategy)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    for v in report:
        if v:
            note = f" ({v.note})" if v.note else ""
            click.echo(f"{v.equation.name}: valid-on-sample [{v.instances} instances]{note}")
        else:
            witness = ", ".join(
                f"{n} -> {syntax.print_expr(t)}" for n, t in sorted(v.assignment.items())
            )
            click.echo(f"{v.equation.name}: counterexample [{witness}]")
    if not report.all_valid:
        sys.exit(1)


@main.command(name="models")
@click.option("--satisfy", required=True, help="Comma-separated set names.")
@click.option("--drop", default=None, help="Axiom name to violate.")
@click.option("--max-size", default=3, show_default=True)
@click.option("--budget", default=60.0, show_default=True)
def models_cmd(satisfy, drop, max_size, budget):
    """Search for a finite model of the given sets."""
    equations = []
    for name in satisfy.split(","):
        axset = axioms.BUILTIN_SETS.get(name.strip())
        if axset is None:
            click.echo(f"error: unknown set {name.strip()!r}", err=True)
            sys.exit(2)
        equations.extend(axset)
    violate = None
    if drop is not None:
        matches = [eq for eq in equations if eq.name == drop]
        if not matches:
            click.echo(f"error: no axiom named {drop!r} in the given sets", err=True)
            sys.exit(2)
        violate = matches[0]
        equations = [eq for eq in equations if eq.name != drop]
    try:
        result = models.find_model(equations, violate, max_size, budget)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    if result:
        click.echo(result.model.to_json())
    else:
        click.echo(result.status)
        sys.exit(1)


@main.command(name="enumerate")
@click.option("--sigma", required=True)
@click.option("--count-only", is_flag=True)
def enumerate_cmd(sigma, count_only):
    """Enumerate all memorising normal forms over an atom string."""
    try:
        forms = list(normalforms.enumerate_sigma_nf(sigma))
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    if count_only:
        click.echo(str(len(forms)))
        return
    for nf in forms:
        click.echo(syntax.print_expr(nf.body))


@main.command()
@click.argument("expr")
def translate(expr):
    """Translate EXPR to short-circuit connectives."""
    e = _parse_expr(expr)
    try:
        click.echo(scl.print_scl(scl.translate_t(e)))
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)


@main.command(name="bridge-check")
@click.argument("expr")
def bridge_check_cmd(expr):
    """Verify that the translation preserves the evaluation tree."""
    e = _parse_expr(expr)
    try:
        ok = scl.bridge_check(e)
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    if ok:
        click.echo("ok")
    else:
        click.echo("MISMATCH")
        sys.exit(1)


if __name__ == "__main__":
    main()
