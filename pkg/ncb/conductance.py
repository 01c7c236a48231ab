"""
Cut, volume and conductance of node sets, plus seed discovery.

All scores are exact ``Fraction`` values so that ties between neighborhoods
compare exactly; floats appear only at export time.
"""

import heapq
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from .errors import UndefinedConductanceError
from .graph import Graph

logger = logging.getLogger(__name__)


class SeedRecord(BaseModel):
    """
    A best local community: node whose closed neighborhood beats all its neighbors'.

    Seeds are listed by (score, node); a fallback seed has no score.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    score: Optional[Fraction]
    node: int
    fallback: bool = False


class ProfileRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: int
    label: str
    degree: int
    conductance: Optional[float]


def cut(g: Graph, nodes: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in the set."""
    members = g.check_nodes(nodes)
    return _cut(g, members)


def _cut(g: Graph, members: FrozenSet[int]) -> int:
    total = 0
    for v in members:
        for w in g.adj(v):
            if w not in members:
                total += 1
    return total


def volume(g: Graph, nodes: Iterable[int]) -> int:
    """d(S): degree sum of the set."""
    members = g.check_nodes(nodes)
    degrees = g.degrees
    return sum(degrees[v] for v in members)


def internal_edges(g: Graph, nodes: Iterable[int]) -> int:
    """Edges with both endpoints in the set, via volume(S) - cut(S) = 2 * internal."""
    members = g.check_nodes(nodes)
    degrees = g.degrees
    return (sum(degrees[v] for v in members) - _cut(g, members)) // 2


def _ratio(cut_size: int, vol: int, total: int) -> Fraction:
    denominator = min(vol, total - vol)
    if denominator <= 0:
        raise UndefinedConductanceError(
            f"conductance undefined: min(d(S), d(V\\S)) = {denominator}"
        )
    return Fraction(cut_size, denominator)


def conductance(g: Graph, nodes: Iterable[int]) -> Fraction:
    """
    phi(S) = cut(S) / min(d(S), d(V \\ S)).

    Raises:
        UndefinedConductanceError: S empty, S = V, or either side has zero volume
    """
    members = g.check_nodes(nodes)
    if not members:
        raise UndefinedConductanceError("conductance of the empty set is undefined")
    if len(members) == g.n:
        raise UndefinedConductanceError("conductance of the whole node set is undefined")
    degrees = g.degrees
    vol = sum(degrees[v] for v in members)
    return _ratio(_cut(g, members), vol, g.total_volume)


def neighborhood_conductance(g: Graph, v: int) -> Fraction:
    """
    Conductance of the closed neighborhood {v} + N1(v).

    Raises:
        UndefinedConductanceError: v isolated, or its closed neighborhood
            holds the whole graph volume
    """
    g.check_node(v)
    nbrs = g.adj_set(v)
    if not nbrs:
        raise UndefinedConductanceError(f"node {v} is isolated")
    degrees = g.degrees
    vol = degrees[v]
    # each edge among neighbors is seen from both endpoints
    among = 0
    for w in nbrs:
        vol += degrees[w]
        among += len(g.adj_set(w) & nbrs)
    inside = degrees[v] + among // 2
    return _ratio(vol - 2 * inside, vol, g.total_volume)


def _safe_neighborhood_conductance(g: Graph, v: int) -> Optional[Fraction]:
    try:
        return neighborhood_conductance(g, v)
    except UndefinedConductanceError:
        return None


def neighborhood_scores(g: Graph) -> List[Optional[Fraction]]:
    """Closed-neighborhood conductance for every node, None where undefined."""
    return [_safe_neighborhood_conductance(g, v) for v in range(g.n)]


def find_seeds(g: Graph, scores: Optional[List[Optional[Fraction]]] = None) -> List[SeedRecord]:
    """
    Local conductance minima, ascending by (score, node id).

    A node qualifies when its score is <= every neighbor's; neighbors with an
    undefined score do not block it. When no node qualifies (e.g. a complete
    graph) the lowest-degree non-isolated node is returned as a fallback seed.
    """
    if scores is None:
        scores = neighborhood_scores(g)

    heap: List[Tuple[Fraction, int]] = []
    for v in range(g.n):
        score = scores[v]
        if score is None:
            continue
        if all(scores[w] is None or score <= scores[w] for w in g.adj(v)):
            heap.append((score, v))
    heapq.heapify(heap)
    seeds = [SeedRecord(score=score, node=v) for score, v in (heapq.heappop(heap) for _ in range(len(heap)))]

    if not seeds:
        degrees = g.degrees
        candidates = [v for v in range(g.n) if degrees[v] > 0]
        node = min(candidates, key=lambda v: (degrees[v], v))
        logger.warning(f"No local conductance minimum; falling back to minimum-degree node {g.label(node)}")
        return [SeedRecord(score=None, node=node, fallback=True)]

    logger.info(f"Found {len(seeds)} seeds (best score {float(seeds[0].score):.4f})")
    return seeds


def profile(g: Graph) -> List[ProfileRecord]:
    """One (node, degree, closed-neighborhood conductance) record per node."""
    records = []
    for v, score in enumerate(neighborhood_scores(g)):
        records.append(
            ProfileRecord(
                node=v,
                label=g.labels[v],
                degree=g.degrees[v],
                conductance=None if score is None else float(score),
            )
        )
    return records


def degree_distribution(g: Graph) -> List[Tuple[int, int]]:
    """(degree, node count) pairs, ascending by degree."""
    degrees, counts = np.unique(g.degree_array(), return_counts=True)
    return [(int(d), int(c)) for d, c in zip(degrees, counts)]
