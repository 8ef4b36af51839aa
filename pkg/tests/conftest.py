import json
import os
import subprocess
import sys

import pytest


def strip_timestamps(obj):
    """Drop every "timestamp" key, recursively."""
    if isinstance(obj, dict):
        return {k: strip_timestamps(v) for k, v in obj.items() if k != "timestamp"}
    if isinstance(obj, list):
        return [strip_timestamps(v) for v in obj]
    return obj


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "convlat", *args],
        capture_output=True,
        text=True,
        env={**os.environ, **(env or {})},
    )


@pytest.fixture
def cli(capsys):
    """In-process CLI call returning (exit code, parsed stdout or text, stderr)."""
    from convlat.cli import main

    def call(*args):
        code = main(list(args))
        out, err = capsys.readouterr()
        try:
            data = json.loads(out)
        except json.JSONDecodeError:
            data = out
        return code, data, err

    return call


@pytest.fixture
def write_json(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
