"""
dpwheel - Configuration Commands

Commands:
- config show: Print the effective settings
- config set: Persist a setting to the user config file
"""

import click
from rich.table import Table

from commands.common import console, fail
from pkg.config import parse_value
from pkg.errors import DPWError


@click.group("config")
def config_group():
    """Show or change settings"""
    pass


@config_group.command("show")
@click.pass_context
def show_config(ctx):
    """Print the effective settings"""
    config = ctx.obj["config"]
    try:
        settings = config.flat()
    except DPWError as e:
        fail(ctx, e)
        return
    table = Table(title=f"⚙️  Settings ({config.config_path})")
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Value", style="green")
    for key, value in settings.items():
        table.add_row(key, str(value))
    console.print(table)


@config_group.command("set")
@click.argument("key")
@click.argument("value")
@click.pass_context
def set_config(ctx, key, value):
    """Persist KEY = VALUE (YAML scalar) to the config file"""
    config = ctx.obj["config"]
    try:
        config.set(key, parse_value(value))
    except DPWError as e:
        fail(ctx, e)
        return
    console.print(f"✅ [green]{key} = {config.get(key)!r}[/green]")
