from __future__ import annotations

from pathlib import Path

import pytest
from click.testing import CliRunner

REPO_ROOT = Path(__file__).resolve().parent.parent
SAMPLES = REPO_ROOT / "samples.ccspec"
ERROR_CORPUS = Path(__file__).resolve().parent / "data" / "errors"


@pytest.fixture
def samples_path() -> Path:
    return SAMPLES


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
