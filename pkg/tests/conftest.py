from fractions import Fraction

from hypothesis import strategies as st

from osctab.partitions import Partition, partitions_up_to
from osctab.polyring import Poly

SMALL_PARTITIONS = list(partitions_up_to(8))


@st.composite
def partitions(draw, max_size=8):
    pool = [p for p in SMALL_PARTITIONS if sum(p) <= max_size]
    return draw(st.sampled_from(pool))


rationals = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=12),
)


@st.composite
def polys(draw, max_degree=6, max_terms=6):
    monos = [(i, j - i) for j in range(max_degree + 1) for i in range(j + 1)]
    keys = draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True))
    return Poly({m: draw(rationals) for m in keys})


# one PASS/FAIL line per acceptance criterion in the terminal summary

_criteria: dict[int, tuple[str, list[bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


import pytest  # noqa: E402


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    number, title = mark.args
    _criteria.setdefault(number, (title, []))[1].append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        status = "PASS" if outcomes and all(outcomes) else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title}")
