import random

import pytest

from qpoin.algebra import Element, gen
from qpoin.tables import GEN_NAMES


@pytest.fixture
def rng():
    return random.Random(1234)


def random_element(rng: random.Random, terms: int = 2, max_len: int = 3) -> Element:
    out = Element()
    for _ in range(terms):
        word = Element.one()
        for _ in range(rng.randint(0, max_len)):
            word = word * gen(rng.choice(GEN_NAMES))
        out = out + word.scale(rng.randint(-3, 3))
    return out
