import pytest

from fgwitness.witness import PipelineConfig, run_pipeline
from fgwitness.words import parse_word

CORPUS = {
    "<aa,ab>": ["aa", "ab"],
    "<a>": ["a"],
    "<ab,ba>": ["ab", "ba"],
    "<aa,bb,abab>": ["aa", "bb", "abab"],
    "<abA>": ["abA"],
    "<aaa,aba>": ["aaa", "aba"],
}

ACCEPTANCE_LINES = []


def words(texts, rank=2):
    return [parse_word(t, rank) for t in texts]


@pytest.fixture(scope="session")
def unverified_reports():
    """Corpus reports with the verification suites skipped (tests run them)."""
    cfg = PipelineConfig(verify=False)
    return {name: run_pipeline(words(g), 2, cfg) for name, g in CORPUS.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
