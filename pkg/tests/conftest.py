import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


def pytest_report_header(config):
    import effecttopo

    return f"effecttopo kernel backend: {effecttopo.KERNEL_BACKEND}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion, printed after the test table."""
    module = sys.modules.get("test_acceptance")
    log = getattr(module, "ACCEPTANCE_LOG", None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, status, seconds in sorted(log):
        dots = "." * max(2, 58 - len(label))
        terminalreporter.write_line(
            f"criterion {number:02d}  {label} {dots} {status}  ({seconds:.1f}s)"
        )
