import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("mixspec", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("mixspec")

# acceptance criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def record_criterion(capsys):
    def record(k: int, ok: bool, detail: str) -> None:
        ACCEPTANCE[k] = (ok, detail)
        with capsys.disabled():
            print(f"\ncriterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

    return record
