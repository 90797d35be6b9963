import random

import pytest

from twographs.graphs import Graph


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_graph(rng, n):
    return Graph(n, rng.getrandbits(n * (n - 1) // 2))


def random_subset(rng, n):
    return [v for v in range(n) if rng.random() < 0.5]


def random_perm(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
