"""
dpwheel - Element Commands

This module provides commands that work on single elements or on the
enumerated set of partial isometries:
- Enumerating DP(G) for the wheel and the other graph families
- Classifying an element of DPW_n as Minus, Plus or Outside
- Computing J-types and named J-classes

Commands:
- enumerate: List every partial isometry of a graph, optionally filtered
- classify: Classification, rank, J-class name and hub placement of an element
- jtype: J-type of an element of DPW_n^-
"""

from collections import Counter

import click
from rich.table import Table

from commands.common import EXIT_FAIL, check_n, console, fail, parse_element, spinner, write_json
from pkg.errors import DPWError, InvalidParameterError, NotAMemberError
from pkg.graphs import GRAPH_FAMILIES, build_graph, wheel
from pkg.green import theorem_j_label
from pkg.isometry import enumerate_dp, is_partial_isometry
from pkg.ptrans import omega, to_dict
from pkg.wheel import Classification, char_member_minus, classify, j_type, psi, split_lemma_check

FILTERS = tuple(c.value for c in Classification)


@click.command("enumerate")
@click.option("--graph", "family", type=click.Choice(GRAPH_FAMILIES), default="wheel", show_default=True)
@click.option("--n", "n", type=int, required=True, help="Rim size for the wheel, vertex count otherwise")
@click.option("--filter", "kind", type=click.Choice(FILTERS), default=None, help="Wheel only: keep one class")
@click.option("--workers", type=int, default=None, help="Worker processes (default: from config)")
@click.option("--out", "out", default=None, help="Write elements as JSON ('-' for stdout)")
@click.pass_context
def enumerate_cmd(ctx, family, n, kind, workers, out):
    """Enumerate the partial isometries of a graph"""
    config = ctx.obj["config"]
    try:
        if kind and family != "wheel":
            raise InvalidParameterError("--filter applies to the wheel only")
        G = build_graph(family, n)
        with spinner(f"Enumerating DP({G.name})..."):
            elements = enumerate_dp(G, cap=config.vertex_cap, workers=workers or config.workers)
        if kind:
            elements = [x for x in elements if classify(n, x).value == kind]
    except DPWError as e:
        fail(ctx, e)
        return

    by_rank = Counter(x.rank for x in elements)
    table = Table(title=f"🔢 Partial isometries of {G.name}" + (f" ({kind})" if kind else ""))
    table.add_column("Rank", style="cyan", justify="right")
    table.add_column("Elements", style="green", justify="right")
    for rank in sorted(by_rank):
        table.add_row(str(rank), str(by_rank[rank]))
    table.add_row("[bold]total[/bold]", f"[bold]{len(elements)}[/bold]")
    console.print(table)

    if out:
        write_json(
            out,
            {
                "graph": family,
                "n": n,
                "filter": kind,
                "count": len(elements),
                "elements": [to_dict(x) for x in elements],
            },
        )


@click.command("classify")
@click.option("--n", "n", type=int, required=True)
@click.option("--element", "element", required=True, help="Element JSON; ambient defaults to 0..n")
@click.option("--json", "as_json", is_flag=True, help="Print the result as JSON")
@click.pass_context
def classify_cmd(ctx, n, element, as_json):
    """Classify an element of DPW_n"""
    try:
        check_n(n)
        alpha = parse_element(element, n)
        if not is_partial_isometry(wheel(n), alpha):
            raise NotAMemberError(f"{alpha} is not a partial isometry of W_{n}")
        kind = classify(n, alpha)
        result = {
            "element": to_dict(alpha),
            "classification": kind.value,
            "rank": alpha.rank,
            "j_type": None,
            "j_class": theorem_j_label(n, alpha),
            "split_violations": split_lemma_check(n, alpha),
        }
        if kind is Classification.MINUS:
            result["j_type"] = list(j_type(alpha).parts)
        elif kind is Classification.PLUS:
            result["j_type"] = list(j_type(psi(alpha)).parts)
    except DPWError as e:
        fail(ctx, e)
        return

    if as_json:
        write_json(None, result)
    else:
        table = Table(title=f"🧭 {alpha}")
        table.add_column("Property", style="cyan")
        table.add_column("Value", style="white")
        table.add_row("Classification", kind.value)
        table.add_row("Rank", str(alpha.rank))
        table.add_row("J-type", str(tuple(result["j_type"])) if result["j_type"] is not None else "-")
        table.add_row("J-class", result["j_class"])
        violations = result["split_violations"]
        table.add_row("Hub placement", "[red]" + ", ".join(violations) + "[/red]" if violations else "[green]ok[/green]")
        console.print(table)
    if result["split_violations"]:
        ctx.exit(EXIT_FAIL)


@click.command("jtype")
@click.option("--n", "n", type=int, required=True)
@click.option("--element", "element", required=True, help="Element JSON; ambient defaults to 1..n")
@click.pass_context
def jtype_cmd(ctx, n, element):
    """J-type of an element of DPW_n^-"""
    try:
        check_n(n)
        alpha = parse_element(element, n, full_world=False)
        if alpha.ambient != omega(n):
            alpha = psi(alpha) if classify(n, alpha) is Classification.PLUS else alpha
        if not char_member_minus(n, alpha):
            raise NotAMemberError(f"{alpha} is not in DPW_{n}^-")
        jt = j_type(alpha)
    except DPWError as e:
        fail(ctx, e)
        return
    console.print(f"📐 J-type of {alpha}: [bold cyan]{jt}[/bold cyan]")
