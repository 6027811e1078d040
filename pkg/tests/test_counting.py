import itertools

import pytest

from homcount.counting import (
    CountMode,
    automorphism_count,
    count,
    count_homomorphisms,
    count_induced_copies,
    count_injective,
    count_subgraph_copies,
    has_induced_copy,
    has_subgraph_copy,
)
from homcount.errors import BudgetExceededError
from homcount.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)
from conftest import random_graph, random_relabel


def brute_homs(h, g):
    """Independent oracle: check every map."""
    total = 0
    for m in itertools.product(range(g.n), repeat=h.n):
        if all(g.has_edge(m[u], m[v]) for u, v in h.edges()):
            total += 1
    return total


def test_hom_basics(rng):
    g = random_graph(rng, 7, 0.4)
    assert count_homomorphisms(complete_graph(1), g) == g.n
    assert count_homomorphisms(complete_graph(2), g) == 2 * g.edge_count
    assert count_homomorphisms(cycle_graph(4), complete_graph(2)) == 2


def test_hom_matches_naive_oracle(rng):
    for _ in range(25):
        h = random_graph(rng, rng.randint(1, 3), 0.5)
        g = random_graph(rng, rng.randint(1, 5), 0.5)
        assert count_homomorphisms(h, g) == brute_homs(h, g)


def test_injective_and_copies():
    assert count_injective(complete_graph(3), complete_graph(4)) == 24
    assert count_subgraph_copies(complete_graph(3), complete_graph(4)) == 4
    g = petersen_graph()
    assert count_subgraph_copies(complete_graph(2), g) == g.edge_count
    assert count_subgraph_copies(path_graph(3), star_graph(4)) == 6


def test_induced_copies():
    g = petersen_graph()
    assert count_induced_copies(complete_graph(2), g) == g.edge_count
    assert count_induced_copies(path_graph(3), complete_graph(3)) == 0
    assert count_induced_copies(path_graph(3), cycle_graph(5)) == 5


def test_automorphisms():
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(petersen_graph()) == 120
    assert automorphism_count(cycle_graph(5)) == 10


def test_injective_at_most_hom(rng):
    for _ in range(30):
        h = random_graph(rng, rng.randint(1, 4), 0.5)
        g = random_graph(rng, rng.randint(1, 6), 0.5)
        assert count_injective(h, g) <= count_homomorphisms(h, g)
        assert count_induced_copies(h, g) <= count_subgraph_copies(h, g)


def test_hom_multiplicative_over_disjoint_patterns(rng):
    for _ in range(15):
        h1 = random_graph(rng, rng.randint(1, 3), 0.5)
        h2 = random_graph(rng, rng.randint(1, 3), 0.5)
        g = random_graph(rng, rng.randint(1, 6), 0.4)
        assert count_homomorphisms(disjoint_union(h1, h2), g) == count_homomorphisms(
            h1, g
        ) * count_homomorphisms(h2, g)


def test_relabel_invariance(rng):
    for _ in range(20):
        h = random_graph(rng, rng.randint(1, 4), 0.5)
        g = random_graph(rng, rng.randint(1, 6), 0.5)
        h2 = random_relabel(rng, h)
        g2 = random_relabel(rng, g)
        assert count_subgraph_copies(h, g) == count_subgraph_copies(h2, g2)
        assert count_induced_copies(h, g) == count_induced_copies(h2, g2)
        assert count_homomorphisms(h, g) == count_homomorphisms(h2, g2)


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        count_homomorphisms(complete_graph(5), complete_graph(40), budget=1000)


def test_empty_pattern_edge_cases():
    g = complete_graph(3)
    assert count_homomorphisms(Graph(0), g) == 1
    assert count_subgraph_copies(Graph(2), g) == 3  # any 2 vertices host an edgeless pair
    assert count_injective(complete_graph(4), complete_graph(3)) == 0


def test_existence_helpers():
    assert has_subgraph_copy(cycle_graph(4), complete_graph(4))
    assert not has_induced_copy(cycle_graph(4), complete_graph(4))
    assert has_induced_copy(path_graph(3), cycle_graph(5))


def test_count_dispatch():
    g = star_graph(4)
    assert count(path_graph(3), g, CountMode.SUBGRAPH) == 6
    assert count(complete_graph(2), g, CountMode.HOMOMORPHISM) == 8
    assert count(path_graph(3), g, CountMode.INDUCED) == 6
