"""MCP tool server exposing the algebra through FastMCP."""

from __future__ import annotations

import asyncio
import json
import logging
import sys
from collections.abc import AsyncIterator
from contextlib import asynccontextmanager
from typing import Any

from mcp.server.fastmcp import FastMCP

from .config import VerifyConfig, build_config
from .errors import ParseError, QPlaneError
from .expression import eval_expression
from .tables import OutputFormat, TableKind, build_table, emit_table, render_json
from .verify import identity_ids, run_verify

# stdout is reserved for the MCP protocol
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(_server: FastMCP) -> AsyncIterator[dict[str, Any]]:
    """Hold the session's default verification options."""
    config = VerifyConfig()
    logger.info("cyclic-qplane server starting with %d registered identities", len(identity_ids()))
    yield {"config": config}
    logger.info("cyclic-qplane server shutting down")


mcp = FastMCP(
    name="cyclic-qplane",
    lifespan=lifespan,
)


def _session_config() -> VerifyConfig:
    """Lifespan config inside a request, defaults otherwise."""
    try:
        config: VerifyConfig = mcp.get_context().request_context.lifespan_context["config"]
    except (LookupError, ValueError):
        return VerifyConfig()
    return config


@mcp.tool()
async def evaluate_expression(expression: str, n: int = 3) -> str:
    """Normal form of an expression in the plane (x, y) or in F (a, b, c, d).

    Args:
        expression: Expression such as 'x*y - q*y*x', 'b*a' or 'x^-1*y^2'.
        n: Order N of the root of unity q (>= 2).

    Returns:
        JSON object with the input, N and the canonical rendering.

    Examples:
        - evaluate_expression("y*x", 3) - q^-1 xy, rendered as (-1 - q)·x^1·y^1
        - evaluate_expression("x^3", 3) - 1
    """
    try:
        result = eval_expression(expression, n)
        return json.dumps({"expression": expression, "n": n, "result": result}, indent=2)
    except ParseError as e:
        return json.dumps({"error": str(e), "position": e.position, "expected": e.expected})
    except QPlaneError as e:
        return json.dumps({"error": str(e)})


@mcp.tool()
async def verify_identities(orders: str = "2..8", only: str | None = None) -> str:
    """Check the registered identities at each order N.

    Args:
        orders: Orders such as '3', '3,5,7' or '2..8'.
        only: Optional comma-separated identity ids, e.g. 'calculus.nilpotency'.

    Returns:
        JSON array with one report per N: entries with id, status and witness,
        and a summary with pass/fail/recorded counts.
    """
    base = _session_config()
    try:
        config = build_config(
            orders,
            only,
            known_ids=identity_ids(),
            seed=base.seed,
            exhaustive_limit=base.exhaustive_limit,
            sample_size=base.sample_size,
        )
        reports = await asyncio.to_thread(run_verify, config)
    except QPlaneError as e:
        return json.dumps({"error": str(e)})

    return json.dumps([report.to_json_dict() for report in reports], indent=2)


@mcp.tool()
async def differential_table(n: int = 3, format: str = "text") -> str:
    """Table of the differential d on every basis monomial x^r y^s.

    Args:
        n: Order N (>= 2).
        format: 'text', 'json' or 'latex'.

    Returns:
        JSON object holding the rendered table.
    """
    try:
        rendered = emit_table(TableKind.DIFFERENTIAL, n, format)
        return json.dumps({"n": n, "format": format, "table": rendered}, indent=2)
    except QPlaneError as e:
        return json.dumps({"error": str(e)})


@mcp.tool()
async def structure_table(kind: str = "structure-f", n: int = 3) -> str:
    """Nonzero structure constants, the decomposition or the action table.

    Args:
        kind: 'structure-f', 'structure-C', 'decomposition', 'action' or 'differential'.
        n: Order N (>= 2).

    Returns:
        JSON table with one row per entry.
    """
    try:
        return render_json(build_table(kind, n))
    except QPlaneError as e:
        return json.dumps({"error": str(e)})


@mcp.tool()
async def decompose_plane(n: int = 3) -> str:
    """Split M_N into N blocks of grading 0..N-1, each invariant under H and X±.

    Args:
        n: Order N (>= 2).

    Returns:
        JSON table with the members of each block and its invariance.
    """
    try:
        return emit_table(TableKind.DECOMPOSITION, n, OutputFormat.JSON)
    except QPlaneError as e:
        return json.dumps({"error": str(e)})


def run_server() -> None:
    """Run the MCP server, logging at INFO or finer to stderr."""
    root = logging.getLogger()
    if root.getEffectiveLevel() > logging.INFO:
        root.setLevel(logging.INFO)
    logger.info("serving on stdio")
    mcp.run()
