from pathlib import Path
from typing import Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np
import pytest

from ncb.graph import Graph
from ncb.partition import Partition

DATA = Path(__file__).resolve().parent.parent / "data"

# Zachary karate club, 0-indexed
KARATE_OFFICER = {9, 14, 15, 18, 20, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33}


def build(edges: Iterable[Tuple[int, int]], n: Optional[int] = None) -> Graph:
    """Graph whose ids equal the integer labels 0..n-1."""
    edges = list(edges)
    if n is None:
        n = max(max(e) for e in edges) + 1
    return Graph.from_edges(((str(u), str(v)) for u, v in edges), nodes=(str(v) for v in range(n)))


def clique_edges(nodes: List[int]) -> List[Tuple[int, int]]:
    return [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:]]


def groups(p: Partition) -> set:
    return {frozenset(c.members) for c in p.communities}


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def karate() -> Graph:
    return Graph.from_networkx(nx.karate_club_graph())


@pytest.fixture
def karate_truth(karate) -> Partition:
    return Partition.from_assignment(karate, [1 if v in KARATE_OFFICER else 0 for v in range(karate.n)])


@pytest.fixture
def two_triangles() -> Graph:
    # triangles {0,1,2} and {3,4,5} joined by the bridge 2-3
    return build(clique_edges([0, 1, 2]) + clique_edges([3, 4, 5]) + [(2, 3)])


@pytest.fixture
def path4() -> Graph:
    return build([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k5() -> Graph:
    return build(clique_edges(list(range(5))))


def planted_cliques(k: int, size: int = 5) -> Graph:
    """k disjoint cliques chained in a ring by one edge between consecutive cliques."""
    edges = []
    for c in range(k):
        edges += clique_edges([c * size + i for i in range(size)])
        edges.append((c * size, ((c + 1) % k) * size + 1))
    return build(edges, n=k * size)


def random_graphs(count: int, seed: int = 7, n_range=(5, 40)) -> List[Graph]:
    """Erdos-Renyi graphs with at least one edge; isolated nodes kept."""
    rng = np.random.default_rng(seed)
    graphs = []
    while len(graphs) < count:
        n = int(rng.integers(*n_range))
        p = float(rng.uniform(0.05, 0.5))
        nx_graph = nx.gnp_random_graph(n, p, seed=int(rng.integers(1 << 31)))
        if nx_graph.number_of_edges() == 0:
            continue
        graphs.append(Graph.from_networkx(nx_graph))
    return graphs
