import pytest

import corpus as corpus_mod


@pytest.fixture(scope="session")
def corpus():
    return corpus_mod.build_corpus()


@pytest.fixture(scope="session")
def small_matroids():
    return corpus_mod.all_matroids_up_to(3)
