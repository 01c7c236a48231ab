"""
Community and Partition types shared by NCB and the baselines.

A Community caches its internal edge count and degree sum so that the
stability of a grown community is O(1) to evaluate.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set

import numpy as np

from .errors import NodeDomainError, PartitionMismatchError
from .graph import Graph

logger = logging.getLogger(__name__)

UNASSIGNED = -1


class Community:
    """Mutable member set with cached e_C^in and d(C)."""

    __slots__ = ("id", "members", "internal_edges", "degree_sum")

    def __init__(self, cid: int, members: Optional[Set[int]] = None, internal_edges: int = 0, degree_sum: int = 0):
        self.id = cid
        self.members: Set[int] = set(members or ())
        self.internal_edges = internal_edges
        self.degree_sum = degree_sum

    @classmethod
    def from_members(cls, g: Graph, cid: int, members: Iterable[int]) -> "Community":
        """Build a community and count its internal edges from scratch."""
        member_set = set(g.check_nodes(members))
        degrees = g.degrees
        inside = sum(len(g.adj_set(v) & member_set) for v in member_set) // 2
        return cls(cid, member_set, inside, sum(degrees[v] for v in member_set))

    def add(self, v: int, edges_into: int, degree: int) -> None:
        self.members.add(v)
        self.internal_edges += edges_into
        self.degree_sum += degree

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __repr__(self) -> str:
        return f"Community(id={self.id}, size={len(self.members)}, in={self.internal_edges}, d={self.degree_sum})"


class Partition:
    """Node -> community assignment; UNASSIGNED is only legal mid-algorithm."""

    def __init__(self, n: int):
        self.assignment: List[int] = [UNASSIGNED] * n
        self.communities: List[Community] = []

    @property
    def n(self) -> int:
        return len(self.assignment)

    def __len__(self) -> int:
        return len(self.communities)

    def new_community(self, g: Graph, members: Iterable[int]) -> Community:
        member_list = list(members)
        if not member_list:
            raise NodeDomainError("cannot create an empty community")
        for v in member_list:
            if self.assignment[v] != UNASSIGNED:
                raise NodeDomainError(f"node {v} already belongs to community {self.assignment[v]}")
        community = Community.from_members(g, len(self.communities), member_list)
        self.communities.append(community)
        for v in member_list:
            self.assignment[v] = community.id
        return community

    def assign(self, v: int, cid: int, edges_into: int, degree: int) -> None:
        if self.assignment[v] != UNASSIGNED:
            raise NodeDomainError(f"node {v} already belongs to community {self.assignment[v]}")
        self.communities[cid].add(v, edges_into, degree)
        self.assignment[v] = cid

    def is_assigned(self, v: int) -> bool:
        return self.assignment[v] != UNASSIGNED

    def unassigned(self) -> List[int]:
        return [v for v, c in enumerate(self.assignment) if c == UNASSIGNED]

    def is_total(self) -> bool:
        return UNASSIGNED not in self.assignment

    def members(self) -> List[List[int]]:
        return [sorted(c.members) for c in self.communities]

    def labels_array(self) -> np.ndarray:
        return np.asarray(self.assignment, dtype=np.int64)

    @classmethod
    def from_assignment(cls, g: Graph, assignment: Sequence[int]) -> "Partition":
        """
        Build a total partition from arbitrary per-node labels.

        Community ids are compacted to 0..k-1 in order of first appearance by
        node id, so equal groupings always get equal ids.
        """
        if len(assignment) != g.n:
            raise PartitionMismatchError(f"assignment covers {len(assignment)} nodes, graph has {g.n}")
        remap: Dict[int, int] = {}
        groups: List[List[int]] = []
        for v, label in enumerate(assignment):
            key = int(label)
            if key not in remap:
                remap[key] = len(groups)
                groups.append([])
            groups[remap[key]].append(v)
        partition = cls(g.n)
        for group in groups:
            partition.new_community(g, group)
        return partition

    @classmethod
    def from_groups(cls, g: Graph, groups: Iterable[Iterable[int]]) -> "Partition":
        partition = cls(g.n)
        for group in groups:
            partition.new_community(g, group)
        return partition

    def validate(self, g: Graph) -> None:
        """
        Check totality, disjointness and cached counters against a brute-force recount.

        Raises:
            PartitionMismatchError: on any inconsistency
        """
        if self.n != g.n:
            raise PartitionMismatchError(f"partition covers {self.n} nodes, graph has {g.n}")
        if not self.is_total():
            raise PartitionMismatchError(f"{len(self.unassigned())} nodes are unassigned")
        seen = 0
        for community in self.communities:
            if not community.members:
                raise PartitionMismatchError(f"community {community.id} is empty")
            for v in community.members:
                if self.assignment[v] != community.id:
                    raise PartitionMismatchError(f"node {v} listed in {community.id} but assigned {self.assignment[v]}")
            seen += len(community.members)
            recount = Community.from_members(g, community.id, community.members)
            if (recount.internal_edges, recount.degree_sum) != (community.internal_edges, community.degree_sum):
                raise PartitionMismatchError(
                    f"community {community.id} counters ({community.internal_edges}, {community.degree_sum}) "
                    f"!= recount ({recount.internal_edges}, {recount.degree_sum})"
                )
        if seen != g.n:
            raise PartitionMismatchError(f"communities hold {seen} memberships for {g.n} nodes")

    def same_grouping(self, other: "Partition") -> bool:
        """True when both partitions group the nodes identically (ids may differ)."""
        if self.n != other.n:
            return False
        return {frozenset(c.members) for c in self.communities} == {frozenset(c.members) for c in other.communities}

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, communities={len(self.communities)})"
