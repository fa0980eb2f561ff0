import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from phylosandwich.experiments import dataset  # noqa: E402


@pytest.fixture(scope="session")
def sec4():
    return dataset("sec4").payload


@pytest.fixture(scope="session")
def example1():
    return dataset("example1").payload


@pytest.fixture(scope="session")
def fig6():
    return dataset("fig6").payload


@pytest.fixture(scope="session")
def fig7():
    return dataset("fig7").payload
