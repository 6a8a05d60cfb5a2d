import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from multitensor.structures import ContractionSpec  # noqa: E402

EXAMPLE_SPEC = {
    "d": 3,
    "lambda": [{"colors": [1, 2, 3], "count": 2}, {"colors": [1, 3], "count": 1}],
    "gamma": [
        {"colors": [1, 2, 3], "count": 2},
        {"colors": [1], "count": 1},
        {"colors": [3], "count": 1},
    ],
}


@pytest.fixture
def example():
    return ContractionSpec.from_dict(EXAMPLE_SPEC)


@pytest.fixture
def example_file(tmp_path):
    import json

    path = tmp_path / "example.json"
    path.write_text(json.dumps(EXAMPLE_SPEC))
    return path


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, (ok, detail) in mod.RESULTS.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
