"""Pytest configuration and fixtures for quiver-lss tests."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from quiver_lss import OracleConfig, Quiver

# =============================================================================
# Standard quivers
# =============================================================================
#
# Vertices are 0-based in the library; the docstrings use file numbering.


@pytest.fixture
def a2() -> Quiver:
    """A2: 1 -> 2."""
    return Quiver(2, ((0, 1),))


@pytest.fixture
def a3() -> Quiver:
    """A3 with linear orientation: 1 -> 2 -> 3."""
    return Quiver(3, ((0, 1), (1, 2)))


@pytest.fixture
def k2() -> Quiver:
    """Kronecker quiver: two arrows 1 -> 2."""
    return Quiver(2, ((0, 1), (0, 1)))


@pytest.fixture
def k3() -> Quiver:
    """Generalized Kronecker quiver: three arrows 1 -> 2."""
    return Quiver(2, ((0, 1), (0, 1), (0, 1)))


@pytest.fixture
def triangle() -> Quiver:
    """Acyclic triangle: 1 -> 2 -> 3 and 1 -> 3."""
    return Quiver(3, ((0, 1), (1, 2), (0, 2)))


@pytest.fixture
def oracle_cfg() -> OracleConfig:
    """Oracle configuration with the default prime and a fixed seed."""
    return OracleConfig(trials=5, seed=0)


# =============================================================================
# Quiver files
# =============================================================================


@pytest.fixture
def write_quiver(tmp_path: Path) -> Callable[[str, str], Path]:
    """Return a helper that writes a quiver file under tmp_path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write


@pytest.fixture
def a2_file(write_quiver: Callable[[str, str], Path]) -> Path:
    return write_quiver("a2.quiver", "vertices 2\narrow 1 2\n")


@pytest.fixture
def a3_file(write_quiver: Callable[[str, str], Path]) -> Path:
    return write_quiver("a3.quiver", "vertices 3\narrow 1 2\narrow 2 3\n")


@pytest.fixture
def k2_file(write_quiver: Callable[[str, str], Path]) -> Path:
    return write_quiver(
        "k2.quiver",
        """\
# Kronecker quiver
vertices 2
arrow 1 2
arrow 1 2
""",
    )


@pytest.fixture
def k3_file(write_quiver: Callable[[str, str], Path]) -> Path:
    return write_quiver("k3.quiver", "vertices 2\narrow 1 2\narrow 1 2\narrow 1 2\n")
