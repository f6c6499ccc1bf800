import pytest

FIG1_X = [14, 8, 6, 3, 8, 1, 5, 3, 20, 7, 3, 4, 6, 2, 4, 5]
FIG1_S = [99, 8, 9, 3, 17, 1, 8, 3, 51, 7, 7, 4, 17, 2, 9, 5]


@pytest.fixture
def fig1_values():
    return list(FIG1_X)


@pytest.fixture
def fig1_file(tmp_path):
    p = tmp_path / "fig1.txt"
    p.write_text("M 16\n" + "".join(f"{v}\n" for v in FIG1_X))
    return p


def step_brute(k, n):
    """Largest power of two dividing k (n for k == 0), by repeated division."""
    if k == 0:
        return n
    e = 1
    while k % (2 * e) == 0:
        e *= 2
    return e


def window_cells(values, n):
    """Stored cells computed straight from their definition, window by window."""
    m = len(values)
    return [sum(values[k : min(k + step_brute(k, n), m)]) for k in range(m)]


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
