import pytest

from airybox.airy_solver import FieldProblem, eigenvalues

FIELD_ALPHAS = (10.0, 50.0, 100.0)


@pytest.fixture(scope="session")
def solved():
    """alpha -> (problem, first ten states), shared across the suite."""
    out = {}
    for a in FIELD_ALPHAS:
        p = FieldProblem(a)
        out[a] = (p, eigenvalues(p, 10))
    return out



def pytest_terminal_summary(terminalreporter):
    import sys

    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
