from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

pytest.importorskip("torch")
pytest.importorskip("transformers")
pytest.importorskip("banglasent_harness")

from banglasent_harness import prepare  # noqa: E402

REPO_ROOT = Path(__file__).resolve().parent.parent.parent
SAMPLE_CORPUS = REPO_ROOT / "data" / "sample_corpus.csv"

from harness_support import ACCEPTANCE_LINES  # noqa: E402


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("harness acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def _export(tmp_dir: Path, label_column: str, name: str) -> Path:
    """Produce a labeled export through the scoring pipeline's CLI — the file
    interface is the only coupling between the two packages."""
    out = tmp_dir / name
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "banglasent.cli",
            "export",
            "--input",
            str(SAMPLE_CORPUS),
            "--output",
            str(out),
            "--label-column",
            label_column,
        ],
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        pytest.skip(f"scoring pipeline CLI unavailable: {result.stderr.strip()}")
    return out


@pytest.fixture(scope="session")
def nine_export(tmp_path_factory) -> Path:
    return _export(tmp_path_factory.mktemp("exports"), "category", "export9.csv")


@pytest.fixture(scope="session")
def binary_export(tmp_path_factory) -> Path:
    return _export(tmp_path_factory.mktemp("exports"), "binary_pred", "export2.csv")


@pytest.fixture(scope="session")
def nine_data(nine_export):
    return prepare(nine_export, seed=42, max_seq_len=32)


@pytest.fixture(scope="session")
def binary_data(binary_export):
    return prepare(binary_export, seed=42, max_seq_len=32)
