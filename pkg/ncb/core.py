"""
NCB community detection: conductance-seeded communities grown by gravitation.

Pipeline: find_seeds -> init_communities -> expand -> assign_leftovers.
Every tie is broken by ascending node id, then ascending community id, so a
run is fully determined by its input graph.
"""

import heapq
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Sequence, Set, Tuple

from pydantic import BaseModel

from .conductance import SeedRecord, find_seeds
from .errors import NodeDomainError, NoSeedError, UndefinedGravitationError, ZeroVolumeError
from .graph import Graph
from .partition import Community, Partition

logger = logging.getLogger(__name__)


class TraceEvent(BaseModel):
    kind: Literal["accept", "reject", "leftover", "singleton", "merge"]
    node: int
    community: int
    gravitation: Optional[float] = None
    epsilon: Optional[float] = None


# ---- scores ----

def _edges_into(g: Graph, u: int, community: Community) -> int:
    return len(g.adj_set(u) & community.members)


def gravitation(g: Graph, u: int, community: Community) -> Fraction:
    """CF_u(C) = e_C^u / d_u, the share of u's edges landing in C."""
    g.check_node(u)
    if u in community.members:
        raise NodeDomainError(f"node {u} is already a member of community {community.id}")
    degree = g.degrees[u]
    if degree == 0:
        raise UndefinedGravitationError(f"node {u} is isolated")
    return Fraction(_edges_into(g, u, community), degree)


def stability(community: Community) -> Fraction:
    """s(C) = 2 * e_C^in / d(C)."""
    if community.degree_sum <= 0:
        raise ZeroVolumeError(f"community {community.id} has zero degree sum")
    return Fraction(2 * community.internal_edges, community.degree_sum)


def _epsilon(internal: int, degree_sum: int, edges_into: int, degree: int) -> Fraction:
    grown = Fraction(2 * (internal + edges_into), degree_sum + degree)
    return grown - Fraction(2 * internal, degree_sum)


def capture_factor(g: Graph, community: Community, v: int) -> Fraction:
    """
    epsilon = s(C + {v}) - s(C), evaluated without mutating C.

    Raises:
        ZeroVolumeError: C has zero degree sum
    """
    g.check_node(v)
    if v in community.members:
        raise NodeDomainError(f"node {v} is already a member of community {community.id}")
    degree = g.degrees[v]
    if degree == 0:
        raise UndefinedGravitationError(f"node {v} is isolated")
    if community.degree_sum <= 0:
        raise ZeroVolumeError(f"community {community.id} has zero degree sum")
    return _epsilon(community.internal_edges, community.degree_sum, _edges_into(g, v, community), degree)


def _accepts(community: Community, edges_into: int, degree: int) -> bool:
    # epsilon > 0  <=>  d(C) * e_C^v > e_C^in * d_v
    return community.degree_sum * edges_into > community.internal_edges * degree


# ---- candidate index ----

class CandidateIndex:
    """
    Max-priority frontier of (gravitation, node, community) entries.

    Entries are pushed on every gravitation change and invalidated lazily:
    a popped entry is discarded when its node is assigned, its pair was
    rejected, or a newer entry superseded its edge count.
    """

    def __init__(self, g: Graph):
        self._g = g
        self._heap: List[Tuple[float, int, int, int]] = []
        self._links: Dict[int, Dict[int, int]] = {}
        self._rejected: Set[Tuple[int, int]] = set()

    @classmethod
    def from_partition(cls, g: Graph, partition: Partition) -> "CandidateIndex":
        index = cls(g)
        assignment = partition.assignment
        for community in partition.communities:
            for v in community.members:
                for w in g.adj(v):
                    if not partition.is_assigned(w):
                        links = index._links.setdefault(w, {})
                        links[community.id] = links.get(community.id, 0) + 1
        for w, links in index._links.items():
            for cid, count in links.items():
                index._push(w, cid, count)
        logger.debug(f"Candidate index seeded with {len(index._heap)} entries ({sum(a < 0 for a in assignment)} unassigned)")
        return index

    def _push(self, u: int, cid: int, count: int) -> None:
        heapq.heappush(self._heap, (-count / self._g.degrees[u], u, cid, count))

    def add_link(self, u: int, cid: int) -> None:
        """Record one more edge from u into community cid and refresh its entry."""
        links = self._links.setdefault(u, {})
        count = links.get(cid, 0) + 1
        links[cid] = count
        if (u, cid) not in self._rejected:
            self._push(u, cid, count)

    def reject(self, u: int, cid: int) -> None:
        self._rejected.add((u, cid))

    def forget(self, u: int) -> None:
        self._links.pop(u, None)

    def pop(self, partition: Partition) -> Optional[Tuple[int, int, int]]:
        """Best live (node, community, edges_into) entry, or None when exhausted."""
        while self._heap:
            _, u, cid, count = heapq.heappop(self._heap)
            if partition.is_assigned(u) or (u, cid) in self._rejected:
                continue
            if self._links.get(u, {}).get(cid) != count:
                continue
            return u, cid, count
        return None


# ---- stages ----

def _closest_community(g: Graph, partition: Partition, group: Sequence[int]) -> Optional[Tuple[int, int]]:
    """(community id, edges from group into it) with the most edges; ties go to the lowest id."""
    counts = Counter(partition.assignment[w] for u in group for w in g.adj(u) if partition.is_assigned(w))
    if not counts:
        return None
    cid = min(counts, key=lambda c: (-counts[c], c))
    return cid, counts[cid]


def init_communities(
    g: Graph,
    seeds: Sequence[SeedRecord],
    merge_seeds: bool = False,
    trace: Optional[List[TraceEvent]] = None,
) -> Tuple[Partition, CandidateIndex]:
    """
    Open one community per usable seed, in ascending seed order.

    A seed already claimed by an earlier community is skipped; otherwise it
    founds a community from the still-unassigned part of its closed
    neighborhood.

    With ``merge_seeds`` a key node joins an existing community instead of
    founding one when more than half of the degree of its unassigned
    neighborhood points into that community. The whole group then moves in.

    Raises:
        NoSeedError: empty seed list
    """
    if not seeds:
        raise NoSeedError("no seeds to initialize communities from")
    partition = Partition(g.n)
    degrees = g.degrees
    skipped = merged = 0
    for seed in seeds:
        v = seed.node
        if partition.is_assigned(v):
            skipped += 1
            continue
        members = [v] + [w for w in g.adj(v) if not partition.is_assigned(w)]
        closest = _closest_community(g, partition, members) if merge_seeds else None
        if closest is not None and 2 * closest[1] > sum(degrees[u] for u in members):
            cid = closest[0]
            community = partition.communities[cid]
            for u in members:
                partition.assign(u, cid, _edges_into(g, u, community), degrees[u])
            merged += 1
            if trace is not None:
                trace.append(TraceEvent(kind="merge", node=v, community=cid))
            continue
        partition.new_community(g, members)

    index = CandidateIndex.from_partition(g, partition)
    logger.info(
        f"Initial stage: {len(partition)} communities from {len(seeds)} seeds "
        f"({skipped} consumed, {merged} merged), {len(partition.unassigned())} nodes unassigned"
    )
    return partition, index


def expand(
    g: Graph,
    partition: Partition,
    index: CandidateIndex,
    trace: Optional[List[TraceEvent]] = None,
) -> Partition:
    """
    Grow communities from the globally best candidate until the index is empty.

    The popped node joins when its capture factor is strictly positive;
    otherwise the (node, community) pair is rejected for good.
    """
    degrees = g.degrees
    accepted = rejected = 0
    while True:
        entry = index.pop(partition)
        if entry is None:
            break
        u, cid, count = entry
        community = partition.communities[cid]
        degree = degrees[u]
        ok = _accepts(community, count, degree)
        if trace is not None:
            trace.append(
                TraceEvent(
                    kind="accept" if ok else "reject",
                    node=u,
                    community=cid,
                    gravitation=count / degree,
                    epsilon=float(_epsilon(community.internal_edges, community.degree_sum, count, degree)),
                )
            )
        if not ok:
            index.reject(u, cid)
            rejected += 1
            continue
        partition.assign(u, cid, count, degree)
        index.forget(u)
        accepted += 1
        for w in g.adj(u):
            if not partition.is_assigned(w):
                index.add_link(w, cid)

    logger.info(f"Extension stage: {accepted} accepted, {rejected} rejected, {len(partition.unassigned())} left")
    return partition


def assign_leftovers(g: Graph, partition: Partition, trace: Optional[List[TraceEvent]] = None) -> Partition:
    """
    Attach every remaining node, ignoring the capture factor.

    Each round decides, from the assignment at the start of the round, the
    community with the largest gravitation for every unassigned node that has
    an assigned neighbor (ties: lowest community id), then applies all
    decisions. Isolated nodes become singleton communities.
    """
    degrees = g.degrees
    assignment = partition.assignment
    rounds = 0
    while True:
        pending = [v for v in partition.unassigned() if degrees[v] > 0]
        if not pending:
            break
        rounds += 1
        decisions = []
        for v in pending:
            counts = Counter(assignment[w] for w in g.adj(v) if assignment[w] >= 0)
            if counts:
                cid = min(counts, key=lambda c: (-counts[c], c))
                decisions.append((v, cid))
        if not decisions:
            # a component no seed reached
            v = pending[0]
            community = partition.new_community(g, [v])
            logger.warning(f"Node {g.label(v)} unreachable from any community; opened community {community.id}")
            if trace is not None:
                trace.append(TraceEvent(kind="singleton", node=v, community=community.id))
            continue
        for v, cid in decisions:
            community = partition.communities[cid]
            edges_in = _edges_into(g, v, community)
            if trace is not None:
                trace.append(TraceEvent(kind="leftover", node=v, community=cid, gravitation=edges_in / degrees[v]))
            partition.assign(v, cid, edges_in, degrees[v])

    for v in partition.unassigned():
        community = partition.new_community(g, [v])
        if trace is not None:
            trace.append(TraceEvent(kind="singleton", node=v, community=community.id))

    if rounds:
        logger.info(f"Update stage: leftovers assigned in {rounds} rounds")
    return partition


def detect(g: Graph, trace: Optional[List[TraceEvent]] = None, merge_seeds: bool = False) -> Partition:
    """Run the full NCB pipeline and return a total, disjoint partition."""
    seeds = find_seeds(g)
    partition, index = init_communities(g, seeds, merge_seeds=merge_seeds, trace=trace)
    expand(g, partition, index, trace=trace)
    assign_leftovers(g, partition, trace=trace)
    logger.info(f"NCB found {len(partition)} communities on {g.n} nodes")
    return partition
