"""Command-line interface.

Exit status: 0 when every asserted identity passes, 1 when at least one fails,
2 on usage, parse or option errors.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Annotated, NoReturn

import typer

from .config import build_config
from .errors import QPlaneError
from .expression import eval_expression
from .models import Status, VerificationReport
from .tables import OutputFormat, TableKind, emit_table
from .verify import identity_ids, run_verify

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

app = typer.Typer(
    name="cyclic-qplane",
    help="Exact algebra on the cyclic quantum plane M_N and its Z_N-graded calculus.",
    no_args_is_help=True,
    add_completion=False,
)


@app.callback()
def configure(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log debug messages to stderr.")
    ] = False,
) -> None:
    """Configure logging; stdout carries results only."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def _fail(error: QPlaneError) -> NoReturn:
    typer.echo(f"Error: {error}", err=True)
    raise typer.Exit(2)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text)
    else:
        out.write_text(text + "\n", encoding="utf-8")
        logger.info("Wrote %s", out)


def format_reports(reports: list[VerificationReport]) -> str:
    """Text rendering: one line per entry, then a summary line per N."""
    lines: list[str] = []
    for report in reports:
        lines.append(f"N={report.n}")
        for entry in report.entries:
            line = f"  {entry.status.value:<15} {entry.id}"
            if entry.witness and entry.status is not Status.RECORDED_TRUE:
                line += f": {entry.witness}"
            lines.append(line)
        summary = report.summary
        lines.append(
            f"N={report.n} summary: {summary.passed} pass, {summary.fail} fail, "
            f"{summary.recorded} recorded"
        )
    return "\n".join(lines)


@app.command()
def verify(
    n: Annotated[
        str, typer.Option("--n", help="Orders, e.g. 3, 3,5,7, 2..8 or 2..4,7.")
    ] = "2..8",
    only: Annotated[
        str | None, typer.Option("--only", help="Comma-separated identity ids.")
    ] = None,
    as_json: Annotated[bool, typer.Option("--json", help="Emit the JSON report.")] = False,
    out: Annotated[Path | None, typer.Option("--out", help="Write to a file.")] = None,
    jobs: Annotated[int, typer.Option("--jobs", help="Worker processes.")] = 1,
    seed: Annotated[int, typer.Option("--seed", help="Seed for sampled sweeps.")] = 0,
) -> None:
    """Check every registered identity at each order N."""
    try:
        config = build_config(n, only, known_ids=identity_ids(), seed=seed, jobs=jobs)
        reports = run_verify(config)
    except QPlaneError as e:
        _fail(e)

    if as_json:
        text = json.dumps([report.to_json_dict() for report in reports], indent=2)
    else:
        text = format_reports(reports)
    _emit(text, out)
    raise typer.Exit(0 if all(report.ok for report in reports) else 1)


@app.command("eval")
def eval_command(
    n: Annotated[int, typer.Option("--n", help="Order N of the root of unity.")],
    expression: Annotated[str, typer.Argument(help="Expression, e.g. 'x*y - q*y*x'.")],
) -> None:
    """Print the normal form of an expression in M_N or F."""
    try:
        typer.echo(eval_expression(expression, n))
    except QPlaneError as e:
        _fail(e)


@app.command()
def table(
    kind: Annotated[TableKind, typer.Option("--kind", help="Which table.")],
    n: Annotated[int, typer.Option("--n", help="Order N.")],
    fmt: Annotated[
        OutputFormat, typer.Option("--format", help="Output format.")
    ] = OutputFormat.TEXT,
    out: Annotated[Path | None, typer.Option("--out", help="Write to a file.")] = None,
) -> None:
    """Emit a deterministic table."""
    try:
        text = emit_table(kind, n, fmt)
    except QPlaneError as e:
        _fail(e)
    _emit(text, out)


@app.command()
def decompose(
    n: Annotated[int, typer.Option("--n", help="Order N.")],
    as_json: Annotated[bool, typer.Option("--json", help="Emit JSON.")] = False,
) -> None:
    """List the N invariant blocks of M_N."""
    fmt = OutputFormat.JSON if as_json else OutputFormat.TEXT
    try:
        typer.echo(emit_table(TableKind.DECOMPOSITION, n, fmt))
    except QPlaneError as e:
        _fail(e)


@app.command()
def serve() -> None:
    """Run the MCP tool server over stdio."""
    from .server import run_server

    run_server()
