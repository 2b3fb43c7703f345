"""
dpwheel - Factorization Command

Writes an element of DPW_n (or of DPW_n^- with --rim) as a word over the
named generators and evaluates the word back as a check.

Styles:
- constructive: the word built by the lemma-by-lemma construction
- shortest: the shortlex-least word from the closure of the generating set
"""

import click
from rich.table import Table

from commands.common import EXIT_FAIL, check_n, console, fail, parse_element, spinner, write_json
from pkg.closure import generate
from pkg.errors import DPWError
from pkg.factor import FullFactorizer, MinusFactorizer, evaluate, shortest_word
from pkg.gens import genset_full, genset_minus
from pkg.ptrans import to_dict


@click.command("factorize")
@click.option("--n", "n", type=int, required=True)
@click.option("--element", "element", required=True, help="Element JSON; ambient defaults to 0..n")
@click.option("--rim", is_flag=True, help="Factor over g, h, e, c_j; ambient defaults to 1..n")
@click.option("--style", type=click.Choice(["constructive", "shortest"]), default="constructive", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the result as JSON")
@click.pass_context
def factorize_cmd(ctx, n, element, rim, style, as_json):
    """Factor an element over the named generators"""
    config = ctx.obj["config"]
    try:
        check_n(n)
        alpha = parse_element(element, n, full_world=not rim)
        factorizer = MinusFactorizer(n) if rim else FullFactorizer(n)
        with spinner("Factoring..."):
            word = factorizer.factor(alpha)
            shortest = None
            if style == "shortest":
                gens = genset_minus(n) if rim else genset_full(n)
                closure = generate(gens.ambient, gens, cap=config.element_cap)
                shortest = shortest_word(closure, alpha, n)
        chosen = shortest if shortest is not None else word
        evaluates = evaluate(chosen) == alpha
    except DPWError as e:
        fail(ctx, e)
        return

    result = {
        "element": to_dict(alpha),
        "style": style,
        "word": chosen.to_list(),
        "length": len(chosen),
        "constructive_length": len(word),
        "shortest_length": len(shortest) if shortest is not None else None,
        "evaluates": evaluates,
    }
    if as_json:
        write_json(None, result)
    else:
        table = Table(title=f"✍️  Factorization of {alpha}")
        table.add_column("Property", style="cyan")
        table.add_column("Value", style="white")
        table.add_row("Word", " ".join(chosen.to_list()) or "(empty word)")
        table.add_row("Length", str(len(chosen)))
        table.add_row("Constructive length", str(len(word)))
        if shortest is not None:
            table.add_row("Shortest length", str(len(shortest)))
        table.add_row("Evaluates back", "[green]✅ yes[/green]" if evaluates else "[red]❌ no[/red]")
        console.print(table)
    if not evaluates:
        ctx.exit(EXIT_FAIL)
