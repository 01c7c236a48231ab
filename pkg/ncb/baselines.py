"""
Comparison algorithms: asynchronous label propagation and CNM-style greedy
modularity agglomeration.
"""

import heapq
import logging
from collections import Counter
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from .graph import Graph
from .partition import Partition

logger = logging.getLogger(__name__)


def lpa(g: Graph, seed: int = 0, max_iters: int = 100) -> Partition:
    """
    Asynchronous label propagation.

    Every node starts with its own label. Each iteration visits the nodes in
    a seed-shuffled order; a node whose label is not among its most frequent
    neighbor labels moves to one of them, drawn uniformly among ties. The
    run stops after a pass with no label change, or after ``max_iters``
    iterations.

    Unlike the textbook update, which redraws among all tied labels every
    time, a node keeps its current label whenever that label is one of the
    tied best. A pass with no change is then a fixed point of the update,
    and runs settle instead of flipping between tied labels.

    Args:
        g: input graph
        seed: RNG seed; equal seeds give equal partitions
        max_iters: iteration cap

    Returns:
        Partition with community ids compacted in node-id order
    """
    rng = np.random.default_rng(seed)
    labels = list(range(g.n))
    iterations = 0
    converged = False
    while iterations < max_iters:
        iterations += 1
        unsettled = False
        for v in rng.permutation(g.n):
            v = int(v)
            nbrs = g.adj(v)
            if not nbrs:
                continue
            counts = Counter(labels[w] for w in nbrs)
            top = max(counts.values())
            if counts.get(labels[v], 0) == top:
                continue
            best = sorted(label for label, c in counts.items() if c == top)
            labels[v] = best[int(rng.integers(len(best)))] if len(best) > 1 else best[0]
            unsettled = True
        if not unsettled:
            converged = True
            break

    if not converged:
        logger.warning(f"LPA hit max_iters={max_iters} before settling (seed={seed})")
    partition = Partition.from_assignment(g, labels)
    logger.info(f"LPA seed={seed}: {len(partition)} communities after {iterations} iterations")
    return partition


class MergeStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    first: int
    second: int
    delta_q: float
    modularity: float


def greedy_modularity_trace(g: Graph) -> Tuple[Partition, List[MergeStep]]:
    """
    Agglomerate communities by best modularity gain until no merge helps.

    Gains are compared exactly as integers: for communities i, j joined by
    e_ij edges, delta Q * (2m)^2 / 2 = 2m * e_ij - d_i * d_j. Ties go to the
    lexicographically smallest (i, j); the merged community keeps id i.

    Returns:
        the peak-modularity partition and the merge history
    """
    two_m = g.total_volume
    degree = {v: d for v, d in enumerate(g.degrees)}
    links: Dict[int, Dict[int, int]] = {v: {w: 1 for w in g.adj(v)} for v in range(g.n)}
    members: Dict[int, List[int]] = {v: [v] for v in range(g.n)}

    def gain(i: int, j: int) -> int:
        return two_m * links[i][j] - degree[i] * degree[j]

    heap = [(-gain(i, j), i, j) for i in range(g.n) for j in links[i] if i < j]
    heapq.heapify(heap)

    # 4m^2 * Q, kept exact
    scaled_q = -sum(d * d for d in degree.values())
    history: List[MergeStep] = []
    while heap:
        neg, i, j = heapq.heappop(heap)
        if i not in members or j not in members or j not in links[i] or -neg != gain(i, j):
            continue
        if -neg <= 0:
            break
        best = -neg
        scaled_q += 2 * best
        history.append(
            MergeStep(first=i, second=j, delta_q=2 * best / two_m**2, modularity=scaled_q / two_m**2)
        )

        members[i].extend(members.pop(j))
        degree[i] += degree.pop(j)
        for k, count in links.pop(j).items():
            if k == i:
                continue
            links[k].pop(j)
            links[i][k] = links[i].get(k, 0) + count
            links[k][i] = links[i][k]
        links[i].pop(j, None)
        for k in links[i]:
            a, b = (i, k) if i < k else (k, i)
            heapq.heappush(heap, (-gain(a, b), a, b))

    partition = Partition.from_groups(g, (sorted(group) for _, group in sorted(members.items())))
    logger.info(f"Greedy modularity: {len(history)} merges, {len(partition)} communities")
    return partition, history


def greedy_modularity(g: Graph) -> Partition:
    partition, _ = greedy_modularity_trace(g)
    return partition
