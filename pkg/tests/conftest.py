import pytest
from hypothesis import settings

from mwposet.gf import field_make
from mwposet.poset import antichain, chain, poset_from_covers

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def two_chains():
    """1<2<3 and 4<5 on [5]."""
    return poset_from_covers(5, [(1, 2), (2, 3), (4, 5)])


def two_pairs():
    """1<3 and 2<4 on [4]."""
    return poset_from_covers(4, [(1, 3), (2, 4)])


def named_corpus():
    return {
        "two_chains": two_chains(),
        "two_pairs": two_pairs(),
        "chain4": chain(4),
        "antichain4": antichain(4),
    }


@pytest.fixture
def P5():
    return two_chains()


@pytest.fixture
def P4():
    return two_pairs()


@pytest.fixture
def F2():
    return field_make(2)


@pytest.fixture
def F3():
    return field_make(3)


# --- one PASS/FAIL line per acceptance criterion ------------------------------

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _criteria[number] = (report.outcome == "passed", doc, report.duration)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, doc, dur = _criteria[n]
        tr.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  ({dur:.2f}s)  {doc}")
    passed = sum(ok for ok, _, _ in _criteria.values())
    tr.write_line(f"{passed}/{len(_criteria)} criteria pass")
