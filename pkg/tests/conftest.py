import pytest
from hypothesis import settings

from jumpnum.corpus import all_point_bases, random_point_bases

CORPUS_SEED = 42
CORPUS_SIZE = 200

settings.register_profile("default", deadline=None, print_blob=True)
settings.load_profile("default")

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    _acceptance_lines.append(line)


@pytest.fixture(scope="session")
def corpus():
    bases = random_point_bases(8, 30, CORPUS_SIZE, CORPUS_SEED)
    assert len(bases) >= CORPUS_SIZE
    return bases


@pytest.fixture(scope="session")
def small_exhaustive():
    return [b for n in range(1, 7) for b in all_point_bases(n)]


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
