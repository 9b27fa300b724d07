import random

import pytest

from lieyamaguti import adjoint, example_3dim, meson
from lieyamaguti.fixtures import cross_product_lie


@pytest.fixture(scope="session")
def corpus():
    """The named (algebra, adjoint representation) pairs used throughout."""
    algebras = {
        "3dim": example_3dim(),
        "meson2": meson(2),
        "meson3": meson(3),
        "crossproduct-lie": cross_product_lie(),
    }
    return {name: (a, adjoint(a)) for name, a in algebras.items()}


@pytest.fixture()
def rng():
    return random.Random(20240811)
