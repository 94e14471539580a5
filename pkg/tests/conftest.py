import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from barypoly.fixtures import get_fixture


@pytest.fixture(scope="session")
def square():
    return get_fixture("square")


@pytest.fixture(scope="session")
def pentagon():
    return get_fixture("pentagon")


@pytest.fixture(scope="session")
def pyramid():
    return get_fixture("pyramid")


@pytest.fixture(scope="session")
def prism8():
    return get_fixture("prism8")
