import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker('criterion')
    if marker is None:
        return
    n, text = marker.args
    if rep.when == 'call' or (rep.when == 'setup' and rep.failed):
        _criteria[n] = (rep.passed, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep('=', 'acceptance criteria')
    for n in sorted(_criteria):
        ok, text = _criteria[n]
        terminalreporter.write_line(f'criterion {n}: {"PASS" if ok else "FAIL"}  {text}')
