"""
dpwheel - Shared command helpers

- One rich Console for every command group
- Exit codes shared by all commands
- Element parsing from --element strings and JSON output helpers
"""

import csv
import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence

import click
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn

from pkg.errors import DPWError, InvalidParameterError
from pkg.ptrans import Ambient, PartialInjection, from_json, omega, omega0

console = Console()

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


@contextmanager
def spinner(description: str) -> Iterator[None]:
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        progress.add_task(description, total=None)
        yield


def fail(ctx: click.Context, error: DPWError) -> None:
    console.print(f"❌ [red]Error: {error}[/red]")
    ctx.exit(EXIT_USAGE)


def check_n(n: int) -> None:
    if n < 4:
        raise InvalidParameterError(f"the wheel needs n >= 4, got {n}")


def parse_element(text: str, n: int, full_world: bool = True) -> PartialInjection:
    """--element JSON; the ambient defaults to 0..n (or 1..n for rim commands)"""
    default: Ambient = omega0(n) if full_world else omega(n)
    return from_json(text, default_ambient=default)


def write_json(path: Optional[str], data: Any) -> None:
    """To a file, or to stdout when the path is empty or a dash"""
    text = json.dumps(data, indent=2, sort_keys=False)
    if path and path != "-":
        Path(path).write_text(text + "\n")
        console.print(f"💾 [green]Wrote {path}[/green]")
    else:
        click.echo(text)


def write_csv(path: str, rows: Sequence[Dict[str, Any]], columns: List[str]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)
    console.print(f"💾 [green]Wrote {path}[/green]")
