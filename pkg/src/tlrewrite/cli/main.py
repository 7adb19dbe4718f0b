"""
tl - Temperley-Lieb rewriting toolkit

Every subcommand prints its result on stdout; logs go to stderr.
"""

import functools
from collections.abc import Callable
from typing import ParamSpec, TypeVar

import click
from pydantic import BaseModel

from tlrewrite import __version__
from tlrewrite.category import (
    MTerm,
    Mode,
    eval_net,
    format_net,
    format_object,
    format_term,
    hom_basis,
    net_record,
    net_to_term,
    normalize_term,
    parse_object,
    parse_term,
    rewrite_steps,
)
from tlrewrite.cli.payloads import (
    BasisPayload,
    BijectionPayload,
    CompletionPayload,
    CountPayload,
    HomEntry,
    HomPayload,
    NormalizePayload,
    OrientedPayload,
    ProductPayload,
    RuleRecord,
    RulesPayload,
    TermPayload,
)
from tlrewrite.errors import InvalidPath, TLError
from tlrewrite.jnf import diagram_to_jnf, enumerate_jnf
from tlrewrite.laurent import LaurentInt
from tlrewrite.oriented import (
    format_oriented,
    normalize_oriented,
    oriented_records,
    oriented_rules,
    parse_oriented,
    sector_table,
)
from tlrewrite.planar import (
    compose,
    count_diagrams,
    format_diagram,
    format_dyck,
    format_pairs,
    from_dyck,
    parse_dyck,
    parse_pairs,
    to_dyck,
)
from tlrewrite.rewrite import (
    Rule,
    RuleSystem,
    check_confluence,
    check_termination_order,
    knuth_bendix,
    normalize,
    tl_rules,
)
from tlrewrite.util import SettingsManager, configure_logging
from tlrewrite.words import (
    LinComb,
    delta_count,
    evaluate,
    format_lincomb,
    format_word,
    lincomb_records,
    parse_lincomb,
    parse_word,
    strip_delta,
)

RULE_SETS = click.Choice(["base", "completed"])
MODES = click.Choice([mode.value for mode in Mode])


P = ParamSpec("P")
R = TypeVar("R")


def domain_errors(func: Callable[P, R]) -> Callable[P, R]:
    """Turn library errors into a one-line ``Error: ...`` and exit code 1."""

    @functools.wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        try:
            return func(*args, **kwargs)
        except TLError as exc:
            raise click.ClickException(str(exc)) from exc

    return wrapper


def emit(payload: BaseModel) -> None:
    click.echo(payload.model_dump_json(indent=2))


def _system(n: int, rules: str) -> RuleSystem:
    return tl_rules(n, completed=rules == "completed")


def _term_text(term: MTerm, mode: Mode) -> str:
    """Like format_term, but an empty identity keeps the requested mode."""
    if term.slices:
        return format_term(term)
    return f"id {format_object(term.domain, mode)}"


def _rule_records(rules: tuple[Rule, ...] | list[Rule]) -> list[RuleRecord]:
    reasons = {c.rule_id: c.reason for c in check_termination_order(rules).certified}
    return [
        RuleRecord(
            id=rule.id,
            family=rule.family.value,
            lhs=format_word(rule.lhs),
            rhs=format_word(rule.rhs) or "1",
            decreases_by=reasons.get(rule.id, "none"),
        )
        for rule in rules
    ]


@click.group()
@click.version_option(version=__version__, prog_name="tl")
@click.option(
    "--log-level",
    default="WARNING",
    type=click.Choice(["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"]),
    help="Minimum level written to stderr (default: WARNING)",
)
@click.option(
    "--log-dir",
    default=None,
    type=click.Path(file_okay=False),
    help="Also write daily log files to this directory",
)
@click.option(
    "--bubble-convention",
    default="ccw",
    type=click.Choice(["ccw", "cw"]),
    help="Loop value of a counterclockwise bubble: ccw gives q, cw gives q^-1",
)
def cli(log_level: str, log_dir: str | None, bubble_convention: str):
    """Temperley-Lieb algebras: diagrams, rewriting and the monoidal category."""
    configure_logging(level=log_level, log_dir=log_dir)
    SettingsManager.configure(bubble_convention=bubble_convention)


# -- diagrams -----------------------------------------------------------------


@cli.command("count")
@click.option("--n", "n", required=True, type=click.IntRange(min=0), help="Strand count")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
def cmd_count(n: int, as_json: bool):
    """Number of TL_n diagrams (the n-th Catalan number)."""
    count = count_diagrams(n)
    if as_json:
        emit(CountPayload(n=n, count=count))
    else:
        click.echo(count)


@cli.command("basis")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option(
    "--format",
    "fmt",
    default="jnf",
    type=click.Choice(["jnf", "diagram", "dyck"]),
    help="How each basis element is written (default: jnf)",
)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@domain_errors
def cmd_basis(n: int, fmt: str, as_json: bool):
    """List the Jones normal form basis of TL_n."""
    words = sorted(enumerate_jnf(n), key=lambda w: (len(w.render()), w.render()))
    lines: list[str] = []
    for word in words:
        if fmt == "jnf":
            lines.append(str(word))
            continue
        diagram = evaluate(word.render(), n).diagram
        lines.append(
            format_diagram(diagram) if fmt == "diagram" else format_dyck(to_dyck(diagram))
        )
    if as_json:
        emit(BasisPayload(n=n, format=fmt, basis=lines))
    else:
        click.echo("\n".join(lines))


@cli.command("jnf-diagram")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.argument("pairlist")
@domain_errors
def cmd_jnf_diagram(n: int, pairlist: str):
    """Jones normal form of a diagram given as '[(1,2),(3,8),...]'."""
    click.echo(str(diagram_to_jnf(parse_pairs(n, pairlist))))


@cli.command("multiply-diagrams")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@click.argument("lower")
@click.argument("upper")
@domain_errors
def cmd_multiply(n: int, as_json: bool, lower: str, upper: str):
    """Product LOWER*UPPER of two diagrams (UPPER stacked on top)."""
    product = compose(parse_pairs(n, lower), parse_pairs(n, upper))
    text = format_diagram(product.diagram)
    if as_json:
        emit(ProductPayload(n=n, power=product.power, diagram=text))
    elif product.power:
        click.echo(f"({LaurentInt.monomial(product.power).format('d')})*{text}")
    else:
        click.echo(text)


@cli.command("bijection")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option("--dyck", is_flag=True, help="INPUT is a Dyck path such as 'R U R U'")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@click.argument("text")
@domain_errors
def cmd_bijection(n: int, dyck: bool, as_json: bool, text: str):
    """Translate between a diagram pair list and its Dyck path."""
    if dyck:
        path = parse_dyck(text)
        if path.n != n:
            msg = f"path has {path.n} R steps, expected {n}"
            raise InvalidPath(msg)
        diagram = from_dyck(path)
    else:
        diagram = parse_pairs(n, text)
        path = to_dyck(diagram)
    if as_json:
        emit(
            BijectionPayload(
                n=n,
                diagram=format_diagram(diagram),
                dyck=format_dyck(path),
                jnf=str(diagram_to_jnf(diagram)),
            )
        )
    else:
        click.echo(format_pairs(diagram) if dyck else format_dyck(path))


# -- words and rewriting ------------------------------------------------------


@cli.command("normalize")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option(
    "--rules",
    default="completed",
    type=RULE_SETS,
    help="base: the defining relations only; completed: the convergent system",
)
@click.option("--trace", is_flag=True, help="Print every rewrite step")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@click.argument("expr")
@domain_errors
def cmd_normalize(n: int, rules: str, trace: bool, as_json: bool, expr: str):
    """Normal form of a word 'e1 e2 e1' or a combination '(d-1)*e1 + e2'."""
    system = _system(n, rules)
    single = "*" not in expr and "+" not in expr
    source = (
        LinComb.monomial(n, parse_word(expr, n)) if single else parse_lincomb(expr, n)
    )
    steps: list[str] = []
    normals: list[str] = []
    total = LinComb(n=n)
    for word, coeff in source.terms.items():
        result, word_trace = normalize(word, system)
        steps.extend(step.format() for step in word_trace)
        normals.append(format_word(result) or "1")
        # δ letters collect on the left; fold them into the coefficient
        total += LinComb.monomial(
            n, strip_delta(result), coeff.shift(delta_count(result))
        )
    rendered = normals[0] if single else format_lincomb(total)
    if as_json:
        emit(
            NormalizePayload(
                n=n,
                rules=rules,
                input=expr,
                normal_form=rendered,
                terms=lincomb_records(total),
                trace=steps,
            )
        )
        return
    if trace:
        for line in steps:
            click.echo(line)
    click.echo(rendered)


@cli.command("check-confluence")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option("--rules", default="completed", type=RULE_SETS, help="Rule set to check")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@domain_errors
def cmd_check_confluence(n: int, rules: str, as_json: bool):
    """Enumerate critical pairs and test that each one joins."""
    report = check_confluence(_system(n, rules))
    if as_json:
        emit(report)
        return
    click.echo(f"n={n} rules={report.rules} critical_pairs={report.pairs}")
    if report.confluent:
        click.secho("confluent", fg="green")
        return
    click.secho(f"not confluent: {len(report.failures)} unjoinable pair(s)", fg="yellow")
    for failure in report.failures:
        click.echo(
            f"  {failure.source}: {failure.left_rule} -> {failure.left_normal or '1'}"
            f" | {failure.right_rule} -> {failure.right_normal or '1'}"
        )


@cli.command("rules")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option("--rules", default="completed", type=RULE_SETS, help="Rule set to list")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@domain_errors
def cmd_rules(n: int, rules: str, as_json: bool):
    """List the instantiated rules with their termination certificates."""
    system = _system(n, rules)
    records = _rule_records(system.rules)
    terminating = check_termination_order(system).ok
    if as_json:
        emit(RulesPayload(n=n, rules=records, terminating=terminating))
        return
    for record in records:
        click.echo(
            f"{record.id}: {record.lhs} -> {record.rhs}  [{record.decreases_by}]"
        )


@cli.command("complete")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option(
    "--max-steps",
    default=None,
    type=click.IntRange(min=0),
    help="Most rules completion may add before giving up",
)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@domain_errors
def cmd_complete(n: int, max_steps: int | None, as_json: bool):
    """Run Knuth-Bendix completion on the defining relations."""
    if max_steps is not None:
        SettingsManager.configure(completion_budget=max_steps)
    base = tl_rules(n, completed=False)
    result = knuth_bendix(base)
    known = {rule.id for rule in base.rules}
    added = _rule_records([rule for rule in result.rules if rule.id not in known])
    matches = result.as_pairs() == tl_rules(n).as_pairs()
    if as_json:
        emit(
            CompletionPayload(
                n=n, added=added, total=len(result.rules), matches_completed_rules=matches
            )
        )
        return
    for record in added:
        click.echo(f"{record.id}: {record.lhs} -> {record.rhs}")
    click.echo(f"{len(result.rules)} rules, {len(added)} added")
    if matches:
        click.secho("matches the completed rule set", fg="green")
    else:
        click.secho("differs from the completed rule set", fg="yellow")


# -- oriented algebra ---------------------------------------------------------


@cli.group("tlo")
def tlo():
    """The oriented algebra TLO_{n,k}(q)."""


@tlo.command("normalize")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option("--k", "k", required=True, type=click.IntRange(min=0), help="Number of v")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@click.argument("expr")
@domain_errors
def cmd_tlo_normalize(n: int, k: int, as_json: bool, expr: str):
    """Normal form of '1[v^] e1 1[^v]' style expressions."""
    result = normalize_oriented(parse_oriented(expr, n, k), oriented_rules(n, k))
    if as_json:
        emit(
            OrientedPayload(
                n=n,
                k=k,
                input=expr,
                normal_form=format_oriented(result),
                terms=oriented_records(result),
            )
        )
    else:
        click.echo(format_oriented(result))


@tlo.command("dims")
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Strand count")
@click.option("--k", "k", required=True, type=click.IntRange(min=0), help="Number of v")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@domain_errors
def cmd_tlo_dims(n: int, k: int, as_json: bool):
    """Sector dimensions counted from normal forms, beside the net count."""
    table = sector_table(oriented_rules(n, k))
    if as_json:
        emit(table)
        return
    for row in table.rows:
        flag = "" if row.dimension == row.oracle else f"  (nets: {row.oracle})"
        click.echo(f"{row.source} -> {row.target}: {row.dimension}{flag}")
    click.echo(f"total: {table.total}")
    if not table.consistent:
        click.secho("sector counts disagree with the net basis", fg="yellow")


# -- monoidal category --------------------------------------------------------


@cli.group("cat")
def cat():
    """The strict monoidal TL category."""


@cat.command("normalize")
@click.option("--mode", default="oriented", type=MODES, help="oriented or plain strands")
@click.option("--dom", required=True, help="Domain object, e.g. 'v^' or '2'")
@click.option("--trace", is_flag=True, help="Print every rewrite step")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@click.argument("term")
@domain_errors
def cmd_cat_normalize(mode: str, dom: str, trace: bool, as_json: bool, term: str):
    """Normal form of 'id v|cup+|id ^; ...' modulo exchange."""
    parsed = parse_term(term, Mode(mode), parse_object(dom, Mode(mode)))
    steps = [
        f"{step.redex.kind.value} cup={step.redex.cup} cap={step.redex.cap} "
        f"=> {format_term(step.after)}"
        for step in rewrite_steps(parsed)
    ]
    scalar, result = normalize_term(parsed)
    variable = "q" if Mode(mode) is Mode.ORIENTED else "d"
    if as_json:
        emit(
            TermPayload(
                mode=mode,
                input=term,
                scalar_exp=scalar,
                variable=variable,
                term=_term_text(result, Mode(mode)),
                net=net_record(eval_net(parsed)),
                trace=steps,
            )
        )
        return
    if trace:
        for line in steps:
            click.echo(line)
    coeff = LaurentInt.monomial(scalar).format(variable)
    text = _term_text(result, Mode(mode))
    click.echo(f"({coeff})*{text}" if scalar else text)


@cat.command("hom")
@click.option("--mode", default="oriented", type=MODES, help="oriented or plain strands")
@click.option("--dom", required=True, help="Source object")
@click.option("--cod", required=True, help="Target object")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document")
@domain_errors
def cmd_cat_hom(mode: str, dom: str, cod: str, as_json: bool):
    """Basis of Hom(DOM, COD) by nets, each with a term realizing it."""
    v, w = parse_object(dom, Mode(mode)), parse_object(cod, Mode(mode))
    nets = sorted(hom_basis(v, w), key=lambda net: net.match)
    if as_json:
        emit(
            HomPayload(
                mode=mode,
                dom=format_object(v, Mode(mode)),
                cod=format_object(w, Mode(mode)),
                dimension=len(nets),
                basis=[
                    HomEntry(net=net_record(net), term=format_term(net_to_term(net)))
                    for net in nets
                ],
            )
        )
        return
    click.echo(f"dim = {len(nets)}")
    for net in nets:
        click.echo(f"{format_net(net)}  <-  {format_term(net_to_term(net))}")


def main():
    """CLI entry point."""
    cli()


if __name__ == "__main__":
    main()
