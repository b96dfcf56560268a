import pytest
from hypothesis import HealthCheck, settings

from kdelete import constructions as cons
from kdelete._rng import derive_seed
from kdelete.constructions import random_graph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def petersen():
    return cons.petersen()


@pytest.fixture(scope="session")
def c5():
    return cons.cycle(5)


@pytest.fixture(scope="session")
def small_random_graphs():
    """24 seeded graphs on 5..12 vertices, densities 0.2/0.4/0.6."""
    out = []
    for i in range(24):
        n = 5 + i % 8
        p = (2 + 2 * (i % 3)) / 10
        out.append(random_graph(n, p, seed=derive_seed(99, 0x7E57, i)))
    return out
