import pytest

from monofg.presentation import CORPUS_NAMES, load_corpus

FOUR_EXAMPLES = ("ex_dkoszul3", "ex_62_fs", "ex_42_stretched", "ex_63_mixed")


@pytest.fixture(scope="session")
def corpus():
    return {name: load_corpus(name) for name in CORPUS_NAMES}
