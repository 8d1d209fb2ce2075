import pathlib

import pytest

from twistedtorus import alexander_of_knot, family_km

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def delta_k1():
    """Alexander polynomial of T(7,17,6), shared across modules."""
    return alexander_of_knot(family_km(1))


@pytest.fixture(scope="session")
def golden_t7_17_6():
    return (GOLDEN_DIR / "t7_17_6_paper.txt").read_text()
