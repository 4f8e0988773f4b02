import hypothesis
import pytest

hypothesis.settings.register_profile("logimg", max_examples=200, deadline=None)
hypothesis.settings.load_profile("logimg")

# Criterion outcome lines collected by the acceptance tests; written into
# the terminal summary so they survive output capture.
_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_report():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
