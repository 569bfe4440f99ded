import pytest

_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; it passes if the test body finishes."""

    def mark(number: int, label: str):
        _RESULTS[number] = (label, False)
        request.node._criterion = number

    yield mark
    number = getattr(request.node, "_criterion", None)
    if number is not None and request.node.rep_call_passed:
        _RESULTS[number] = (_RESULTS[number][0], True)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        label, ok = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")
