from collections import Counter

import numpy as np
import pytest

from conftest import build, clique_edges, groups, random_graphs
from ncb.baselines import greedy_modularity, greedy_modularity_trace, lpa
from ncb.metrics import modularity
from ncb.published import LPA_MODULARITY_RANGE


@pytest.fixture
def disjoint_triangles():
    return build(clique_edges([0, 1, 2]) + clique_edges([3, 4, 5]))


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_lpa_cannot_cross_components(disjoint_triangles, seed):
    partition = lpa(disjoint_triangles, seed=seed)
    assert groups(partition) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}


def test_lpa_collapses_complete_graph():
    g = build(clique_edges(list(range(6))))
    assert len(lpa(g, seed=3)) == 1


def test_lpa_same_seed_same_partition(karate):
    assert lpa(karate, seed=7).assignment == lpa(karate, seed=7).assignment


def test_lpa_ids_are_compact(karate):
    partition = lpa(karate, seed=1)
    assert sorted(set(partition.assignment)) == list(range(len(partition)))
    assert partition.assignment[0] == 0


def test_lpa_karate_band(karate):
    low, high = LPA_MODULARITY_RANGE["karate"]
    qs = [modularity(karate, lpa(karate, seed=s)) for s in range(5)]
    assert low <= np.mean(qs) <= high


def test_lpa_result_is_a_fixed_point(karate):
    # a settled node holds one of its most frequent neighbor labels, even when tied
    for g in [karate] + random_graphs(20, seed=12):
        labels = lpa(g, seed=4).assignment
        for v in range(g.n):
            counts = Counter(labels[w] for w in g.adj(v))
            if counts:
                assert counts[labels[v]] == max(counts.values())


def test_lpa_iteration_cap_warns(karate, caplog):
    partition = lpa(karate, seed=0, max_iters=1)
    partition.validate(karate)
    assert "max_iters=1" in caplog.text


def test_greedy_disjoint_triangles(disjoint_triangles):
    partition = greedy_modularity(disjoint_triangles)
    assert groups(partition) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    assert modularity(disjoint_triangles, partition) == pytest.approx(0.5)


def test_greedy_single_edge():
    g = build([(0, 1)])
    partition, history = greedy_modularity_trace(g)
    assert len(history) == 1
    assert len(partition) == 1
    assert history[0].modularity == pytest.approx(0.0)


def test_greedy_karate(karate):
    partition, history = greedy_modularity_trace(karate)
    q = modularity(karate, partition)
    assert q == pytest.approx(0.381, abs=0.02)
    assert history[-1].modularity == pytest.approx(q, abs=1e-12)


def test_greedy_history_non_decreasing():
    for g in random_graphs(20, seed=4):
        partition, history = greedy_modularity_trace(g)
        qs = [step.modularity for step in history]
        assert all(b >= a for a, b in zip(qs, qs[1:]))
        assert all(step.delta_q > 0 for step in history)
        if history:
            assert qs[-1] == pytest.approx(modularity(g, partition), abs=1e-12)
