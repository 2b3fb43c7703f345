"""
dpwheel - Verification Command

Runs a verification suite over a range of n and prints one row per
check. The exit code is the report status: 0 pass, 1 fail, 2
inconclusive, 3 usage or config error.
"""

import click
from rich.table import Table

from commands.common import console, fail, spinner, write_json
from pkg.errors import DPWError
from pkg.report import Status
from pkg.verify import cmd_verify

SUITES = ("all", "distances", "characterization", "split", "green", "generation", "factorization", "rank")

STATUS_DISPLAY = {
    Status.PASS: "[green]✅ pass[/green]",
    Status.FAIL: "[red]❌ fail[/red]",
    Status.INCONCLUSIVE: "[yellow]⏳ inconclusive[/yellow]",
}


@click.command("verify")
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--n-min", type=int, default=None, help="Smallest n (default: suite definition)")
@click.option("--n-max", type=int, default=None, help="Largest n (default: suite definition)")
@click.option("--workers", type=int, default=None, help="Worker processes (default: from config)")
@click.option("--report", "report_path", default=None, help="Write {report, timings} as JSON")
@click.pass_context
def verify_cmd(ctx, suite, n_min, n_max, workers, report_path):
    """Run a verification suite"""
    config = ctx.obj["config"]
    try:
        with spinner(f"Running suite '{suite}'..."):
            envelope = cmd_verify(suite, n_min, n_max, config=config, workers=workers)
    except DPWError as e:
        fail(ctx, e)
        return

    report = envelope.report
    table = Table(title=f"🔬 Suite '{suite}' for n = {report.n_min}..{report.n_max}")
    table.add_column("n", style="cyan", justify="right")
    table.add_column("Check", style="white")
    table.add_column("Status")
    table.add_column("Count", style="green", justify="right")
    table.add_column("Detail", style="dim")
    for check in report.checks:
        table.add_row(str(check.n), check.name, STATUS_DISPLAY[check.status], str(check.count), check.detail)
    console.print(table)

    for check in report.checks:
        if check.status is Status.FAIL:
            console.print(f"❌ [red]{check.name} (n = {check.n}) witness: {check.witnesses[0]}[/red]")

    passed = sum(1 for c in report.checks if c.passed)
    console.print(f"\n{STATUS_DISPLAY[report.status]}  {passed}/{len(report.checks)} checks passed")
    if report_path:
        write_json(report_path, envelope.model_dump(mode="json"))
    ctx.exit(report.exit_code)
