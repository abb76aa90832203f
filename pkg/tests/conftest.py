import numpy as np
import pytest

from superlase import derive, paper_preset


@pytest.fixture(scope="session")
def paper_raw():
    return paper_preset()


@pytest.fixture(scope="session")
def paper_params(paper_raw):
    return derive(paper_raw)


@pytest.fixture()
def rng():
    return np.random.default_rng(20260823)
