#!/usr/bin/env python3
"""
dpwheel - Partial isometries of wheel graphs

Command-line entry point. Assembles the command groups, loads the user
configuration and installs the rich logging handler.

Usage:
    dpwheel enumerate --graph wheel --n 5 --filter outside
    dpwheel factorize --n 4 --element '{"map": [[0,0],[1,1],[2,2],[3,3]]}'
    dpwheel verify generation --n-min 4 --n-max 6 --report report.json
"""

import logging
import sys

import click
from rich.logging import RichHandler

from commands.algebra import close_cmd, gens_cmd, green_cmd, rank_cmd
from commands.common import EXIT_USAGE, console
from commands.config import config_group
from commands.elements import classify_cmd, enumerate_cmd, jtype_cmd
from commands.factorize import factorize_cmd
from commands.verify import verify_cmd
from pkg import __version__
from pkg.config import DPWConfig
from pkg.errors import DPWError

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class DPWGroup(click.Group):
    """Maps usage and configuration errors to exit code 3"""

    def main(self, *args, **kwargs):
        standalone = kwargs.pop("standalone_mode", True)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
            code = rv if isinstance(rv, int) else 0
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.Abort:
            console.print("[red]Aborted[/red]")
            code = EXIT_USAGE
        except DPWError as e:
            console.print(f"❌ [red]Error: {e}[/red]")
            code = EXIT_USAGE
        if standalone:
            sys.exit(code)
        return code


@click.group(cls=DPWGroup)
@click.version_option(version=__version__, prog_name="dpwheel")
@click.option("--config", "config_path", default=None, help="Config file (default: ~/.dpwheel/config.yaml)")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging")
@click.pass_context
def cli(ctx, config_path, verbose):
    """Enumerate, generate, factor and verify the partial isometries of wheel graphs"""
    logging.basicConfig(
        level=LOG_LEVELS.get(verbose, logging.DEBUG),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=True)],
        force=True,
    )
    ctx.ensure_object(dict)
    ctx.obj["config"] = DPWConfig(config_path)


cli.add_command(enumerate_cmd)
cli.add_command(classify_cmd)
cli.add_command(jtype_cmd)
cli.add_command(gens_cmd)
cli.add_command(close_cmd)
cli.add_command(green_cmd)
cli.add_command(rank_cmd)
cli.add_command(factorize_cmd)
cli.add_command(verify_cmd)
cli.add_command(config_group)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
