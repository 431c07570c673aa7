import subprocess
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run_cli(*args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "pdmf", *args]
    return subprocess.run(cmd, capture_output=True, text=True)


@pytest.fixture
def data_dir() -> Path:
    return DATA
