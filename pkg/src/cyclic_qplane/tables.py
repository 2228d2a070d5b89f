"""Deterministic tables in text, JSON and LaTeX."""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from enum import Enum
from typing import TypeVar

from . import calculus, hopf
from .cyclotomic import CycNum, check_order
from .errors import UnknownTableError
from .hopf import DualGenerator
from .models import Table, TableRow
from .qplane import UNIT, X, Y, BasisIndex, basis_element, plane_basis, structure_c, structure_f

logger = logging.getLogger(__name__)

E = TypeVar("E", bound=Enum)

_DUAL_LATEX = {
    DualGenerator.H: "H",
    DualGenerator.H_INV: "H^{-1}",
    DualGenerator.X_PLUS: "X_{+}",
    DualGenerator.X_MINUS: "X_{-}",
}


class TableKind(str, Enum):
    DIFFERENTIAL = "differential"
    STRUCTURE_F = "structure-f"
    STRUCTURE_C = "structure-C"
    DECOMPOSITION = "decomposition"
    ACTION = "action"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


def _mono(order: int, index: BasisIndex, *, latex: bool = False) -> str:
    return basis_element(order, index).render(latex=latex)


def _differential(order: int) -> Table:
    rows = []
    for index in plane_basis(order):
        z = basis_element(order, index)
        image = calculus.d(z)
        rows.append(
            TableRow(
                key=list(index),
                cells={"source": z.render(), "image": image.render()},
                line=f"d({z.render()}) = {image.render()}",
                latex=[f"$d({z.render(latex=True)})$", f"${image.render(latex=True)}$"],
            )
        )
    return Table(kind=TableKind.DIFFERENTIAL.value, n=order, columns=["source", "image"], rows=rows)


def _structure(
    order: int,
    kind: TableKind,
    rows_of: Callable[[int], list[tuple[BasisIndex, BasisIndex, BasisIndex, CycNum]]],
    symbol: str,
) -> Table:
    rows = []
    for i, j, k, value in rows_of(order):
        if value.is_zero:
            continue
        label = f"{symbol}^({i.r},{i.s})({j.r},{j.s})_({k.r},{k.s})"
        rows.append(
            TableRow(
                key=[i.r, i.s, j.r, j.s, k.r, k.s],
                cells={
                    "left": _mono(order, i),
                    "right": _mono(order, j),
                    "target": _mono(order, k),
                    "value": value.render(),
                },
                line=f"{label} = {value.render()}",
                latex=[
                    f"${symbol}^{{({i.r},{i.s})({j.r},{j.s})}}_{{({k.r},{k.s})}}$",
                    f"${value.render_latex()}$",
                ],
            )
        )
    return Table(
        kind=kind.value, n=order, columns=["left", "right", "target", "value"], rows=rows
    )


def _decomposition(order: int) -> Table:
    dec = hopf.decompose(order)
    invariant = hopf.invariance_check(dec)
    rows = []
    for k, block in enumerate(dec.blocks, start=1):
        members = ", ".join(_mono(order, index) for index in block)
        status = "invariant" if invariant[k] is None else "not invariant"
        rows.append(
            TableRow(
                key=[k],
                cells={"grading": str(k - 1), "members": members, "invariance": status},
                members=[list(index) for index in block],
                line=f"N_{k} (grading {k - 1}): {members} [{status}]",
                latex=[
                    f"$N_{{{k}}}$",
                    str(k - 1),
                    ", ".join(f"${_mono(order, index, latex=True)}$" for index in block),
                ],
            )
        )
    return Table(
        kind=TableKind.DECOMPOSITION.value,
        n=order,
        columns=["grading", "members", "invariance"],
        rows=rows,
    )


def _action(order: int) -> Table:
    rows = []
    for position, dual in enumerate(DualGenerator):
        for index in (UNIT, X, Y):
            z = basis_element(order, index)
            image = hopf.act_from_coaction(dual, z)
            rows.append(
                TableRow(
                    key=[position, index.r, index.s],
                    cells={"operator": dual.value, "argument": z.render(), "image": image.render()},
                    line=f"{dual.value}({z.render()}) = {image.render()}",
                    latex=[
                        f"${_DUAL_LATEX[dual]}({z.render(latex=True)})$",
                        f"${image.render(latex=True)}$",
                    ],
                )
            )
    return Table(
        kind=TableKind.ACTION.value, n=order, columns=["operator", "argument", "image"], rows=rows
    )


def build_table(kind: TableKind | str, order: int) -> Table:
    """Compute the table of ``kind`` at order N.

    Raises:
        UnknownTableError: If ``kind`` is not a known table kind.
        OrderError: If ``order < 2``.
    """
    table_kind = _coerce(TableKind, kind, "table kind")
    check_order(order)
    logger.debug("Building %s table for N=%d", table_kind.value, order)
    if table_kind is TableKind.DIFFERENTIAL:
        return _differential(order)
    if table_kind is TableKind.STRUCTURE_F:
        return _structure(order, table_kind, structure_f, "f")
    if table_kind is TableKind.STRUCTURE_C:
        return _structure(order, table_kind, structure_c, "C")
    if table_kind is TableKind.DECOMPOSITION:
        return _decomposition(order)
    return _action(order)


def render_text(table: Table) -> str:
    return "\n".join(row.line for row in table.rows)


def render_json(table: Table) -> str:
    return json.dumps(table.model_dump(mode="json", exclude_none=True), indent=2)


def render_latex(table: Table) -> str:
    """Standalone ``article`` document holding one ``tabular``."""
    width = max((len(row.latex) for row in table.rows), default=1)
    lines = [
        r"\documentclass{article}",
        r"\begin{document}",
        rf"\begin{{tabular}}{{{'l' * width}}}",
    ]
    lines.extend(" & ".join(row.latex) + r" \\" for row in table.rows)
    lines.extend([r"\end{tabular}", r"\end{document}"])
    return "\n".join(lines)


_RENDERERS: dict[OutputFormat, Callable[[Table], str]] = {
    OutputFormat.TEXT: render_text,
    OutputFormat.JSON: render_json,
    OutputFormat.LATEX: render_latex,
}


def _coerce(enum: type[E], value: object, label: str) -> E:
    if isinstance(value, enum):
        return value
    try:
        return enum(value)
    except ValueError as e:
        choices = ", ".join(str(member.value) for member in enum)
        raise UnknownTableError(f"unknown {label} '{value}'; choose one of {choices}") from e


def emit_table(
    kind: TableKind | str, order: int, fmt: OutputFormat | str = OutputFormat.TEXT
) -> str:
    """Render a table; identical arguments give identical output.

    Raises:
        UnknownTableError: If ``kind`` or ``fmt`` is unknown.
        OrderError: If ``order < 2``.
    """
    output = _coerce(OutputFormat, fmt, "format")
    table = build_table(kind, order)
    return _RENDERERS[output](table)
