from pathlib import Path

import pytest
from hypothesis import strategies as st

from lamplighter.elements import GenLetter, LnElement, LnParams
from lamplighter.finite_group import cyclic_group, load_group_file

DATA = Path(__file__).parent / "data"

LETTERS = [GenLetter("a", 1), GenLetter("a", -1), GenLetter("t", 1), GenLetter("t", -1)]

words = st.lists(st.sampled_from(LETTERS), max_size=30).map(tuple)
moduli = st.integers(min_value=2, max_value=7)


@st.composite
def ln_elements(draw, n=None, span=6):
    n = draw(moduli) if n is None else n
    params = LnParams(n)
    lamps = draw(st.dictionaries(st.integers(-span, span), st.integers(1, n - 1), max_size=6))
    cursor = draw(st.integers(-span - 2, span + 2))
    return LnElement.from_lamps(params, lamps, cursor)


@pytest.fixture(scope="session")
def klein4():
    return load_group_file(DATA / "klein4.tbl")


@pytest.fixture(scope="session")
def z6():
    return cyclic_group(6)


# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        marker = getattr(report, "acceptance", None)
        if marker is not None:
            _ACCEPTANCE.append((marker, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        report.acceptance = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    # parametrized cases fold into one verdict per criterion
    verdicts = {}
    for (number, title), outcome in _ACCEPTANCE:
        ok = verdicts.get(number, (title, True))[1] and outcome == "passed"
        verdicts[number] = (title, ok)
    for number in sorted(verdicts):
        title, ok = verdicts[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
