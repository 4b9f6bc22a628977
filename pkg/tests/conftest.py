import pathlib

import pytest

from zeigloc.tensor import parse_tensor

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def example1():
    """Order-4 dimension-2 symmetric tensor from the bundled data file."""
    return parse_tensor((DATA / "example1.txt").read_text())


@pytest.fixture(scope="session")
def example2():
    """Order-3 dimension-3 weakly symmetric nonnegative tensor."""
    return parse_tensor((DATA / "example2.txt").read_text())


@pytest.fixture()
def example1_path():
    return str(DATA / "example1.txt")


@pytest.fixture()
def example2_path():
    return str(DATA / "example2.txt")
