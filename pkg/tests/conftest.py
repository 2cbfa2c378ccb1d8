import random

import pytest

from garside.artin import artin_structure
from garside.bkl import bkl_structure
from garside.core import left_normal_form


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run slow reproduction targets",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow target; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_word(st, rng, length=None):
    """A random word of atom letters with random signs."""
    if length is None:
        length = rng.randint(0, 10)
    return [(rng.choice(st.atoms), rng.choice([1, -1])) for _ in range(length)]


def random_element(st, rng, length=None):
    return left_normal_form(st, random_word(st, rng, length))


def random_positive_element(st, rng, length=None):
    if length is None:
        length = rng.randint(0, 10)
    return left_normal_form(
        st, [(rng.choice(st.atoms), 1) for _ in range(length)]
    )


def structures_for_properties():
    """The structure pool the randomized suites draw from."""
    return [artin_structure(n) for n in (3, 4, 5)] + [
        bkl_structure(n) for n in (3, 4, 5, 6)
    ]


@pytest.fixture
def rng():
    return random.Random(20260826)
