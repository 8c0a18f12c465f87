import contextlib
import io
from pathlib import Path

import pytest

from jla import samples
from jla.cli import main as cli_main
from jla.roots import root_decomposition

_acceptance_results = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(num, title): one acceptance criterion"
    )


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call":
        marker = item.get_closest_marker("acceptance")
        if marker:
            num, title = marker.args
            _acceptance_results[num] = (title, report.passed)
    return report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_acceptance_results):
        title, ok = _acceptance_results[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num}: {status} - {title}")

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"

# Algebras whose bundled Cartan candidate yields a valid decomposition.
DECOMPOSABLE = ("sl2", "sl2x2", "sl3", "gl2", "delta_minus_abelian2")


@pytest.fixture(scope="session")
def corpus():
    return samples.corpus()


@pytest.fixture(scope="session")
def decomps(corpus):
    out = {}
    for name in DECOMPOSABLE + ("nonsymmetric_dim2",):
        table, cartan = corpus[name]
        out[name] = root_decomposition(table, cartan)
    return out


def run_cli(*argv):
    """Run the CLI in-process, returning (exit_code, stdout_text)."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()
