import os

import pytest

from framesolve.classify import FrameLexicon
from framesolve.frames import Taxonomy
from framesolve.pipeline import Solver, default_data_path

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def taxonomy():
    return Taxonomy.load(default_data_path("taxonomy.tsv"))


@pytest.fixture(scope="session")
def lexicon(taxonomy):
    return FrameLexicon.load(default_data_path("lexicon.tsv"), taxonomy)


@pytest.fixture
def solver(lexicon, taxonomy):
    return Solver(lexicon, taxonomy)


def pytest_terminal_summary(terminalreporter):
    import sys
    acceptance = sys.modules.get("tests.test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
