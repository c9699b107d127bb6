import pytest

from vortexscat import BeamParameters, ScreenedPotential, screening_mu

# Reference setting: iron (Z = 26) with mu_inf = 1, 300 kV electrons, kappa = 25/a0.
IRON_Z = 26
IRON_KZ = 169.0
IRON_KAPPA = 25.0

_acceptance_lines: list[str] = []


@pytest.fixture
def iron_potential():
    return ScreenedPotential(-float(IRON_Z), screening_mu(IRON_Z))


@pytest.fixture
def iron_beam():
    return BeamParameters(IRON_KZ, IRON_KAPPA, 0)


@pytest.fixture
def report():
    """Record one summary line per acceptance criterion check."""

    def _report(criterion: str, passed: bool, detail: str) -> bool:
        _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
