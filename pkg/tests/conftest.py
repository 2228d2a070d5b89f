"""Pytest fixtures for cyclic_qplane tests."""

from __future__ import annotations

from pathlib import Path

import pytest

from cyclic_qplane.config import VerifyConfig
from cyclic_qplane.cyclotomic import CycNum, q_pow
from cyclic_qplane.qplane import PlaneElement

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def q3() -> CycNum:
    """The root of unity q at N = 3."""
    return q_pow(3, 1)


@pytest.fixture
def x3() -> PlaneElement:
    """Generator x of M_3."""
    return PlaneElement.x(3)


@pytest.fixture
def y3() -> PlaneElement:
    """Generator y of M_3."""
    return PlaneElement.y(3)


@pytest.fixture
def config() -> VerifyConfig:
    """Small verification config for fast sweeps."""
    return VerifyConfig(orders=(3,), sample_size=20)


@pytest.fixture
def golden_differential() -> str:
    """Expected text of the N = 3 differential table."""
    return (GOLDEN_DIR / "n3_differential_table.txt").read_text(encoding="utf-8")
