"""Tests for table emission."""

from __future__ import annotations

import json

import pytest

from cyclic_qplane.errors import OrderError, UnknownTableError
from cyclic_qplane.tables import OutputFormat, TableKind, build_table, emit_table


class TestDifferentialTable:
    """Tests for the differential table."""

    def test_golden_n3(self, golden_differential: str) -> None:
        """Test the N = 3 text table line by line."""
        assert emit_table("differential", 3, "text") + "\n" == golden_differential

    def test_json(self) -> None:
        """Test JSON rows carry the source and image renderings."""
        data = json.loads(emit_table(TableKind.DIFFERENTIAL, 3, OutputFormat.JSON))
        assert data["kind"] == "differential"
        assert data["n"] == 3
        assert len(data["rows"]) == 9
        assert data["rows"][1] == {
            "key": [0, 1],
            "cells": {"source": "y^1", "image": "(2 + q)·x^1·y^1"},
        }

    def test_latex_standalone(self) -> None:
        """Test the LaTeX document wrapper and one row."""
        latex = emit_table(TableKind.DIFFERENTIAL, 3, OutputFormat.LATEX)
        lines = latex.splitlines()
        assert lines[0] == r"\documentclass{article}"
        assert lines[2] == r"\begin{tabular}{ll}"
        assert lines[-1] == r"\end{document}"
        assert r"$d(y^{1})$ & $(2 + q) x^{1} y^{1}$ \\" in lines


class TestStructureTables:
    """Tests for the structure constant tables."""

    def test_structure_f_n2(self) -> None:
        """Test 16 entries at N = 2, each the single q^{-ms} constant."""
        data = json.loads(emit_table("structure-f", 2, "json"))
        assert len(data["rows"]) == 16
        rows = {tuple(row["key"]): row["cells"] for row in data["rows"]}
        assert rows[(0, 1, 1, 0, 1, 1)]["value"] == "-1"
        assert rows[(1, 0, 0, 1, 1, 1)]["value"] == "1"

    def test_structure_c_skips_zeros(self) -> None:
        """Test that only nonzero bracket constants are listed."""
        table = build_table(TableKind.STRUCTURE_C, 3)
        assert table.rows
        assert all(row.cells["value"] != "0" for row in table.rows)
        assert len(table.rows) < 81

    def test_structure_text(self) -> None:
        """Test a text line of the f table."""
        assert "f^(0,1)(1,0)_(1,1) = -1 - q" in emit_table("structure-f", 3).splitlines()


class TestDecompositionTable:
    """Tests for the decomposition table."""

    def test_json_blocks(self) -> None:
        """Test three blocks of three indices at N = 3."""
        data = json.loads(emit_table("decomposition", 3, "json"))
        assert [row["members"] for row in data["rows"]] == [
            [[0, 0], [2, 1], [1, 2]],
            [[1, 0], [0, 1], [2, 2]],
            [[2, 0], [1, 1], [0, 2]],
        ]
        assert all(row["cells"]["invariance"] == "invariant" for row in data["rows"])

    def test_text(self) -> None:
        """Test the first block line."""
        first = emit_table("decomposition", 3).splitlines()[0]
        assert first == "N_1 (grading 0): 1, x^2·y^1, x^1·y^2 [invariant]"


class TestActionTable:
    """Tests for the action table."""

    def test_n3(self) -> None:
        """Test H, X+ and X- on 1, x and y at N = 3."""
        lines = emit_table("action", 3).splitlines()
        assert len(lines) == 12
        for expected in (
            "H(1) = 1",
            "H(x^1) = (q)·x^1",
            "H(y^1) = (-1 - q)·y^1",
            "X+(y^1) = x^1",
            "X+(1) = 0",
            "X-(x^1) = y^1",
            "H^-1(x^1) = (-1 - q)·x^1",
        ):
            assert expected in lines


class TestEmitTable:
    """Tests for argument handling and determinism."""

    def test_unknown_kind(self) -> None:
        """Test error for an unknown table kind."""
        with pytest.raises(UnknownTableError, match="table kind"):
            emit_table("eigenvalues", 3)

    def test_unknown_format(self) -> None:
        """Test error for an unknown format."""
        with pytest.raises(UnknownTableError, match="format"):
            emit_table("differential", 3, "yaml")

    def test_bad_order(self) -> None:
        """Test error for N < 2."""
        with pytest.raises(OrderError):
            emit_table("differential", 1)

    @pytest.mark.parametrize("kind", list(TableKind))
    @pytest.mark.parametrize("fmt", list(OutputFormat))
    def test_deterministic(self, kind: TableKind, fmt: OutputFormat) -> None:
        """Test identical calls give identical output."""
        assert emit_table(kind, 4, fmt) == emit_table(kind, 4, fmt)
