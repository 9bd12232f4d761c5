import pytest

from monopole_reduction import GaugeSetup, SWDatum, elliptic_setup, hyperbolic, diagonal, direct_sum


@pytest.fixture
def H():
    return hyperbolic()


@pytest.fixture
def e3():
    """E(3) catalog setup: F = 2 v1 + v2, F^2 = -10, d_a = n_a = 1."""
    return elliptic_setup(3)


@pytest.fixture
def e3_level_one():
    """E(3) with F = f + 2 v1 + v2 and an extra class K = 5f + 2s sitting in level 1."""
    m, _, data = elliptic_setup(3)
    f, s = m.label("f"), m.label("s")
    F = f + 2 * m.label("v1") + m.label("v2")
    g = GaugeSetup(c1W=f, c1E=F - f, c2E=0)
    return m, g, data + [SWDatum(5 * f + 2 * s, 1)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
