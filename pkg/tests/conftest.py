import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from carlitz.ffield import FieldContext
from carlitz.powersums import SeqCache


@pytest.fixture(scope="session")
def ctx3():
    return FieldContext(3)


@pytest.fixture(scope="session")
def ctx4():
    return FieldContext(4)


@pytest.fixture(scope="session")
def ctx5():
    return FieldContext(5)


@pytest.fixture(scope="session")
def ctx9():
    return FieldContext(9)


@pytest.fixture(scope="session")
def cache3(ctx3):
    return SeqCache(ctx3)


@pytest.fixture(scope="session")
def cache4(ctx4):
    return SeqCache(ctx4)


@pytest.fixture(scope="session")
def cache5(ctx5):
    return SeqCache(ctx5)
