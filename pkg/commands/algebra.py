"""
dpwheel - Monoid Commands

This module provides the commands that build and inspect monoids:
- Listing the named generating sets with their maps
- Closing a generating set and reporting its size and word lengths
- Green's D-classes with their J-type or class name, checked against
  the structure theorems
- Rank bounds and exact rank search

Commands:
- gens: Show a generating set
- close: Generate the monoid of a generating set
- green: Compute D-classes, optionally checking a structure theorem
- rank: Rank by lower+upper bounds or by exhaustive search
"""

from collections import Counter

import click
from rich.table import Table

from commands.common import (
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    check_n,
    console,
    fail,
    spinner,
    write_csv,
    write_json,
)
from pkg.closure import generate
from pkg.errors import DPWError, InvalidParameterError
from pkg.gens import GENERATING_SETS, genset
from pkg.green import MODES, check_theorem, class_table, green
from pkg.monoids import TARGETS, WheelMonoids
from pkg.ptrans import encode_ambient, omega, omega0, to_dict
from pkg.rank import rank_exact, rank_lower_full, rank_lower_minus, rank_upper
from pkg.report import CheckResult

THEOREMS = ("theorem-J-minus", "theorem-J-plus", "theorem-J-union", "theorem-J")


def _monoids(ctx, n: int) -> WheelMonoids:
    config = ctx.obj["config"]
    return WheelMonoids(n, vertex_cap=config.vertex_cap, element_cap=config.element_cap, workers=config.workers)


def _claims_table(title: str, claims) -> Table:
    table = Table(title=title)
    table.add_column("Claim", style="cyan")
    table.add_column("Status", style="white")
    table.add_column("Count", style="green", justify="right")
    for claim in claims:
        mark = "[green]✅ pass[/green]" if claim.passed else f"[red]❌ {claim.status.value}[/red]"
        table.add_row(claim.name, mark, str(claim.count))
    return table


@click.command("gens")
@click.option("--n", "n", type=int, required=True)
@click.option("--set", "name", type=click.Choice(list(GENERATING_SETS)), default="full", show_default=True)
@click.option("--out", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.pass_context
def gens_cmd(ctx, n, name, fmt):
    """List a named generating set"""
    try:
        gens = genset(n, name)
    except DPWError as e:
        fail(ctx, e)
        return

    if fmt == "json":
        write_json(
            None,
            {
                "n": n,
                "set": name,
                "ambient": encode_ambient(gens.ambient),
                "generators": [{"label": str(label), **to_dict(x)} for label, x in gens],
            },
        )
        return

    table = Table(title=f"🧩 Generating set '{name}' for n = {n}")
    table.add_column("Label", style="cyan", no_wrap=True)
    table.add_column("Rank", style="green", justify="right")
    table.add_column("Map", style="white")
    for label, x in gens:
        table.add_row(str(label), str(x.rank), str(x))
    console.print(table)


@click.command("close")
@click.option("--n", "n", type=int, required=True)
@click.option("--set", "name", type=click.Choice(list(GENERATING_SETS)), default="minus", show_default=True)
@click.option("--cap", type=int, default=None, help="Element cap (default: config / DPW_ELEMENT_CAP)")
@click.option("--compare", is_flag=True, help="Compare with the enumerated monoid of the same name")
@click.option("--report", "report", default=None, help="Write the closure summary as JSON")
@click.pass_context
def close_cmd(ctx, n, name, cap, compare, report):
    """Generate the monoid of a named generating set"""
    config = ctx.obj["config"]
    try:
        gens = genset(n, name)
        with spinner(f"Closing {name} for n = {n}..."):
            closure = generate(gens.ambient, gens, cap=cap or config.element_cap)
        summary = {"n": n, "set": name, **closure.summary()}
        summary["word_lengths"] = {
            str(length): count for length, count in sorted(Counter(closure.word_lengths).items())
        }
        if compare:
            if name not in TARGETS:
                raise InvalidParameterError(f"no enumerated counterpart for '{name}'")
            with spinner(f"Enumerating DPW_{n}..."):
                target = _monoids(ctx, n).target(name)
            summary["equals_enumeration"] = closure.element_set == target
            summary["enumerated_size"] = len(target)
    except DPWError as e:
        fail(ctx, e)
        return

    table = Table(title=f"🔁 Closure of '{name}' for n = {n}")
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Generators", ", ".join(closure.labels))
    table.add_row("Elements", str(len(closure)))
    table.add_row("Longest word", str(closure.max_word_length))
    if compare:
        equal = summary["equals_enumeration"]
        table.add_row("Matches enumeration", "[green]✅ yes[/green]" if equal else "[red]❌ no[/red]")
    console.print(table)

    if report:
        write_json(report, summary)
    if compare and not summary["equals_enumeration"]:
        ctx.exit(EXIT_FAIL)


@click.command("green")
@click.option("--n", "n", type=int, required=True)
@click.option("--monoid", type=click.Choice(list(TARGETS)), default="minus", show_default=True)
@click.option("--mode", type=click.Choice(MODES), default="by-dom-im", show_default=True)
@click.option("--check", "theorem", type=click.Choice(THEOREMS), default=None, help="Compare with a structure theorem")
@click.option("--out", "out", default=None, help="Write the class table (.csv or .json)")
@click.pass_context
def green_cmd(ctx, n, monoid, mode, theorem, out):
    """Green's D-classes of a monoid"""
    try:
        check_n(n)
        with spinner(f"Computing D-classes of {monoid} for n = {n}..."):
            closure = _monoids(ctx, n).closure(monoid)
            structure = green(closure, mode)
            rows = class_table(n, closure, structure, monoid)
            results = check_theorem(theorem, n, closure, structure) if theorem else []
    except DPWError as e:
        fail(ctx, e)
        return

    table = Table(title=f"🧬 D-classes of {monoid} for n = {n} ({mode})")
    for column, style in (("class", "dim"), ("size", "green"), ("rank", "cyan"), ("name", "white")):
        table.add_column(column.title(), style=style)
    for row in rows:
        table.add_row(*(str(row[c]) for c in ("class", "size", "rank", "name")))
    console.print(table)

    if out:
        if out.endswith(".csv"):
            write_csv(out, rows, ["class", "size", "rank", "name"])
        else:
            write_json(out, {"n": n, "monoid": monoid, "mode": mode, "classes": rows})
    if results:
        console.print(_claims_table(f"📋 {theorem}", results))
        if not all(r.passed for r in results):
            ctx.exit(EXIT_FAIL)


@click.command("rank")
@click.option("--n", "n", type=int, required=True)
@click.option("--monoid", type=click.Choice(["minus", "full"]), default="minus", show_default=True)
@click.option("--method", type=click.Choice(["lower+upper", "exact"]), default="lower+upper", show_default=True)
@click.option("--budget", type=int, default=None, help="Closure budget for exact search (default: config)")
@click.pass_context
def rank_cmd(ctx, n, monoid, method, budget):
    """Rank of DPW_n^- or DPW_n"""
    config = ctx.obj["config"]
    try:
        check_n(n)
        monoids = _monoids(ctx, n)
        with spinner(f"Closing {monoid} for n = {n}..."):
            closure = monoids.closure(monoid)
        if method == "exact":
            with spinner("Searching generating sets..."):
                search = rank_exact(closure, budget or config.search_budget)
            if search.inconclusive:
                console.print(f"⏳ [yellow]Inconclusive after {search.closures_tried} candidate closures[/yellow]")
                ctx.exit(EXIT_INCONCLUSIVE)
                return
            console.print(f"🎯 rank = [bold green]{search.value}[/bold green] ({search.closures_tried} closures tried)")
            for x in search.generators:
                console.print(f"   • {x}")
            return

        gens = genset(n, monoid)
        ambient = omega(n) if monoid == "minus" else omega0(n)
        target = monoids.target(monoid)
        with spinner("Checking bounds..."):
            upper = rank_upper(ambient, gens, target, cap=config.element_cap)
            lower = rank_lower_minus(n, closure, target) if monoid == "minus" else rank_lower_full(n, closure, target)
    except DPWError as e:
        fail(ctx, e)
        return

    claims = lower.claims + [
        CheckResult.of("named generating set gives the monoid", n, upper.ok, len(gens), witness=upper.witness)
    ]
    console.print(_claims_table(f"📏 Rank of {monoid} for n = {n}", claims))
    console.print(f"lower bound {lower.value}, upper bound {upper.value if upper.ok else '-'}")
    if not (upper.ok and lower.holds and lower.value == upper.value):
        ctx.exit(EXIT_FAIL)
    console.print(f"🎯 rank = [bold green]{upper.value}[/bold green]")
