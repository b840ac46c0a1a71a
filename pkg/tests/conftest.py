import pytest

from zqlattice.currents import LatticeConfig, build_currents
from zqlattice.vertex import VertexFamily

_VERDICTS: dict = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    _VERDICTS[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_VERDICTS):
        ok, detail = _VERDICTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def vf32():
    return VertexFamily(build_currents(LatticeConfig(3, 2)))


@pytest.fixture(scope="session")
def vf33():
    return VertexFamily(build_currents(LatticeConfig(3, 3)))
