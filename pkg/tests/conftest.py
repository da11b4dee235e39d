from __future__ import annotations

import pytest

from banglasent import ldd_from_document, load_ldd
from banglasent.lexicon import bundled_lexicon_path
from toy_support import ACCEPTANCE_LINES, REPO_ROOT, TOY_DOC, TOY_NEGATION, TOY_UNKNOWN


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def starter_ldd():
    return load_ldd(bundled_lexicon_path())


@pytest.fixture(scope="session")
def toy_ldd():
    return ldd_from_document(TOY_DOC)


@pytest.fixture(scope="session")
def toy_ldd_with_idiom():
    doc = dict(TOY_DOC)
    doc["double_negation_idioms"] = [[TOY_UNKNOWN, TOY_NEGATION]]
    return ldd_from_document(doc)


@pytest.fixture(scope="session")
def sample_corpus_path():
    return REPO_ROOT / "data" / "sample_corpus.csv"
