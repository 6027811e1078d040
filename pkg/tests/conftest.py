import random

import pytest

from homcount.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def counterexample_graph(d: int = 2, x_size: int = 1) -> Graph:
    """The degenerate-class counterexample family: a K_{d+1} block Z, a stable
    set Y of size d wired so it covers Z with degree-d attachments, and a
    stable set X whose every vertex sees exactly Y."""
    z = list(range(d + 1))
    y = list(range(d + 1, 2 * d + 1))
    x = list(range(2 * d + 1, 2 * d + 1 + x_size))
    edges = [(a, b) for i, a in enumerate(z) for b in z[i + 1 :]]
    # y_i adjacent to the d vertices of Z skipping z_i; covers Z since d >= 2
    for i, yv in enumerate(y):
        for j, zv in enumerate(z):
            if j != i:
                edges.append((yv, zv))
    for xv in x:
        for yv in y:
            edges.append((xv, yv))
    return Graph(2 * d + 1 + x_size, edges)


@pytest.fixture
def rng():
    return random.Random(20250811)


@pytest.fixture(scope="session")
def hw_counterexample():
    return counterexample_graph(2, 1)
