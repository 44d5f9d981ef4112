import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cliquebounds import enumerate_graphs


@pytest.fixture(scope="session")
def reps_by_n():
    """Isomorphism-class representatives for n = 0..6, computed once."""
    return {n: list(enumerate_graphs(n)) for n in range(7)}


@pytest.fixture(scope="session")
def reps7():
    return list(enumerate_graphs(7))
