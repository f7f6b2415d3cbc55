from pathlib import Path

import pytest

from cpqtransfer import Grid, TransferSystem
from cpqtransfer.tsys_format import load

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.tsys"


def load_ts(name: str) -> TransferSystem:
    doc = load(fixture_path(name))
    return TransferSystem.from_edges(doc.grid, doc.edges)


def as_set(T: TransferSystem) -> set:
    """Edges of T, diagonal included, as plain coordinate tuples."""
    out = {(tuple(v), tuple(v)) for v in T.grid.vertices}
    out |= {(tuple(u), tuple(v)) for u, v in T.edges()}
    return out


def from_set(g: Grid, rel) -> TransferSystem:
    return TransferSystem.from_edges(g, [(u, v) for u, v in rel if u != v])


@pytest.fixture
def fx():
    return load_ts


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
