import math
import random

import pytest

from somborlab.families import TwoTreeRecipe, complete, from_recipe, random_recipe, x_graph
from somborlab.graphs import Graph
from somborlab.indices import edge_weight, sombor_coindex, sombor_index, total_pair_sum
from somborlab.radicals import RadicalSum, sqrt_int


def test_edge_weight_normalizes():
    assert edge_weight(2, 2) == 2 * sqrt_int(2)
    assert edge_weight(2, 3) == sqrt_int(13)
    assert edge_weight(4, 2) == 2 * sqrt_int(5)
    assert edge_weight(3, 2) == edge_weight(2, 3)
    with pytest.raises(ValueError):
        edge_weight(0, 3)


def test_triangle_index():
    assert sombor_index(complete(3)).exact == 6 * sqrt_int(2)
    assert sombor_coindex(complete(3)).exact.is_zero()


def test_book_order_4_values():
    x4 = x_graph(4)
    assert sombor_index(x4).exact == 3 * sqrt_int(2) + 4 * sqrt_int(13)
    assert sombor_coindex(x4).exact == 2 * sqrt_int(2)
    assert total_pair_sum(x4).exact == 5 * sqrt_int(2) + 4 * sqrt_int(13)


def test_order_5_second_family_values():
    # built by hand: order-4 book plus one vertex on a hub-leaf edge
    l5 = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (2, 4)])
    assert sombor_index(l5).exact == RadicalSum({1: 10, 2: 3, 5: 4, 13: 2})
    assert sombor_coindex(l5).exact == RadicalSum({2: 2, 13: 2})


def test_float_shadow_agrees_with_direct_walk():
    rng = random.Random(2)
    for _ in range(20):
        g = from_recipe(random_recipe(rng.randrange(3, 14), rng))
        degs = g.degrees()
        direct = sum(math.hypot(degs[u], degs[v]) for u, v in g.edges())
        value = sombor_index(g)
        assert value.approx == pytest.approx(direct, rel=1e-12)


def test_coindex_of_complete_graphs_is_zero():
    for n in range(2, 8):
        assert sombor_coindex(complete(n)).exact.is_zero()


def test_partition_identity_exact():
    rng = random.Random(40)
    for _ in range(60):
        g = from_recipe(random_recipe(rng.randrange(2, 16), rng))
        assert (sombor_index(g).exact + sombor_coindex(g).exact) == total_pair_sum(g).exact


def test_indices_isomorphism_invariant():
    rng = random.Random(41)
    g = from_recipe(random_recipe(9, rng))
    so = sombor_index(g).exact
    so_bar = sombor_coindex(g).exact
    for _ in range(50):
        perm = list(range(g.order))
        rng.shuffle(perm)
        h = g.relabeled(perm)
        assert sombor_index(h).exact == so
        assert sombor_coindex(h).exact == so_bar


def test_growth_step_never_decreases_index():
    rng = random.Random(42)
    for _ in range(25):
        recipe = random_recipe(rng.randrange(4, 14), rng)
        prev = None
        for cut in range(len(recipe.steps) + 1):
            g = from_recipe(TwoTreeRecipe(recipe.steps[:cut]))
            value = sombor_index(g).exact
            if prev is not None:
                assert value >= prev
            prev = value
