import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from tarrecon.generate import generate_nonisomorphic  # noqa: E402
from tarrecon.params import ParameterKind  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


# kinds whose axiom suites also run on graphs with isolated vertices (order <= 4)
WIDENED = (ParameterKind.SKEW_ZERO_FORCING, ParameterKind.VERTEX_COVER)


def small_universe(kind: ParameterKind, max_n: int = 5):
    """No-isolated graphs of order <= max_n, plus all graphs of order <= 4 for the widened kinds."""
    out = []
    for n in range(1, max_n + 1):
        flt = "no-isolated"
        if kind is ParameterKind.CONNECTED_DOMINATION:
            flt = "connected"
        elif kind in WIDENED and n <= 4:
            flt = "all"
        out.extend(generate_nonisomorphic(n, flt))
    return out



ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
