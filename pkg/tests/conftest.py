import pytest

_VERDICTS = []


class Criterion:
    """Collects named sub-checks for one acceptance criterion."""

    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.checks = []

    def check(self, label, ok):
        self.checks.append((label, bool(ok)))
        return bool(ok)

    def finish(self):
        failed = [label for label, ok in self.checks if not ok]
        verdict = "PASS" if not failed else "FAIL"
        line = f"{verdict} criterion {self.number}: {self.title} ({len(self.checks)} checks)"
        if failed:
            line += "; failed: " + "; ".join(failed)
        _VERDICTS.append((self.number, line))
        print(line)
        assert not failed, line


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    return Criterion(number, title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_VERDICTS):
        terminalreporter.write_line(line)
