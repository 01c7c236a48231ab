"""
Immutable undirected simple graph with dense integer node ids.

External labels (arbitrary strings) map bijectively to ids 0..n-1 in
first-seen order, so a fixed input file always yields the same ids.
"""

import logging
import re
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, TextIO, Tuple

import networkx as nx
import numpy as np

from .errors import EmptyGraphError, GraphParseError, NodeDomainError

logger = logging.getLogger(__name__)


class Graph:
    """Read-only adjacency structure shared by every algorithm in the package."""

    __slots__ = ("_adj", "_adj_sets", "_degrees", "_labels", "_index", "_m")

    def __init__(self, adjacency: Sequence[Sequence[int]], labels: Sequence[str]):
        if len(adjacency) != len(labels):
            raise ValueError("adjacency and labels must have the same length")
        self._adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._adj_sets: Tuple[FrozenSet[int], ...] = tuple(frozenset(nbrs) for nbrs in self._adj)
        self._degrees: Tuple[int, ...] = tuple(len(nbrs) for nbrs in self._adj)
        self._labels: Tuple[str, ...] = tuple(labels)
        self._index: Dict[str, int] = {label: i for i, label in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise ValueError("node labels must be unique")
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if not 0 <= v < len(self._adj) or u not in self._adj_sets[v]:
                    raise ValueError(f"adjacency is not symmetric: {u} -> {v} has no reverse edge")
        self._m = sum(self._degrees) // 2

    # ---- construction ----

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Tuple[str, str]],
        nodes: Optional[Iterable[str]] = None,
    ) -> "Graph":
        """
        Build a simple undirected graph from labelled edges.

        Self-loops and repeated edges (in either direction) are dropped and
        counted. Labels listed in ``nodes`` are registered first, which is how
        isolated nodes enter the graph.

        Raises:
            EmptyGraphError: if no edge survives
        """
        index: Dict[str, int] = {}
        labels: List[str] = []
        adjacency: List[set] = []

        def node_id(label: str) -> int:
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
                adjacency.append(set())
            return index[label]

        for label in nodes or ():
            node_id(str(label))

        self_loops = 0
        duplicates = 0
        for a, b in edges:
            u = node_id(str(a))
            v = node_id(str(b))
            if u == v:
                self_loops += 1
                continue
            if v in adjacency[u]:
                duplicates += 1
                continue
            adjacency[u].add(v)
            adjacency[v].add(u)

        if self_loops or duplicates:
            logger.warning(f"Dropped {self_loops} self-loops and {duplicates} duplicate edges")

        graph = cls(adjacency, labels)
        if graph.m == 0:
            raise EmptyGraphError(f"graph has no edges ({graph.n} nodes)")
        logger.info(f"Loaded graph: {graph.n} nodes, {graph.m} edges")
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Convert any networkx graph; direction and parallel edges are collapsed."""
        return cls.from_edges(
            ((str(u), str(v)) for u, v in nx_graph.edges()),
            nodes=(str(v) for v in nx_graph.nodes()),
        )

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    # ---- basic properties ----

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def total_volume(self) -> int:
        return 2 * self._m

    def degree(self, v: int) -> int:
        self.check_node(v)
        return self._degrees[v]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    def degree_array(self) -> np.ndarray:
        return np.asarray(self._degrees, dtype=np.int64)

    def adj(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbor ids of v."""
        return self._adj[v]

    def adj_set(self, v: int) -> FrozenSet[int]:
        return self._adj_sets[v]

    def label(self, v: int) -> str:
        self.check_node(v)
        return self._labels[v]

    def node_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise NodeDomainError(f"unknown node label {label!r}") from None

    def has_label(self, label: str) -> bool:
        return label in self._index

    def check_node(self, v: int) -> None:
        if not isinstance(v, (int, np.integer)) or v < 0 or v >= len(self._adj):
            raise NodeDomainError(f"node id {v!r} outside [0, {len(self._adj)})")

    def check_nodes(self, nodes: Iterable[int]) -> FrozenSet[int]:
        members = frozenset(int(v) if isinstance(v, np.integer) else v for v in nodes)
        for v in members:
            self.check_node(v)
        return members

    def edges(self) -> Iterable[Tuple[int, int]]:
        """Each undirected edge once, as (u, v) with u < v."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def edge_array(self) -> np.ndarray:
        return np.array(list(self.edges()), dtype=np.int64).reshape(-1, 2)

    def edge_labels(self) -> FrozenSet[FrozenSet[str]]:
        """Label-space edge set; equal for the same network loaded from any format."""
        return frozenset(frozenset((self._labels[u], self._labels[v])) for u, v in self.edges())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---- neighborhood queries ----

def neighborhood(g: Graph, v: int) -> FrozenSet[int]:
    """Open neighborhood N1(v); v itself is excluded."""
    g.check_node(v)
    return g.adj_set(v)


def closed_neighborhood(g: Graph, v: int) -> FrozenSet[int]:
    g.check_node(v)
    return g.adj_set(v) | {v}


def community_neighborhood(g: Graph, members: Iterable[int]) -> FrozenSet[int]:
    """N1(C): nodes outside C adjacent to at least one member of C."""
    community = g.check_nodes(members)
    if not community:
        raise NodeDomainError("community must be non-empty")
    frontier = set()
    for v in community:
        frontier.update(g.adj(v))
    frontier.difference_update(community)
    return frozenset(frontier)


# ---- loaders ----

def load_edge_list(
    source: TextIO,
    comment_prefix: str = "#",
    delimiter: Optional[str] = None,
) -> Graph:
    """
    Parse a SNAP-style edge list.

    Args:
        source: text stream, one edge per line
        comment_prefix: lines starting with this prefix are skipped
        delimiter: token separator; None splits on any whitespace

    Returns:
        Graph with directed pairs symmetrized and duplicates dropped

    Raises:
        GraphParseError: a non-comment line without two endpoint tokens
        EmptyGraphError: no edge survives
    """
    edges = []
    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or (comment_prefix and line.startswith(comment_prefix)):
            continue
        tokens = [t.strip() for t in line.split(delimiter)]
        tokens = [t for t in tokens if t]
        if len(tokens) < 2:
            raise GraphParseError(f"expected two endpoint tokens, got {line!r}", line=line_no)
        # extra columns (weights, timestamps) are ignored
        edges.append((tokens[0], tokens[1]))
    return Graph.from_edges(edges)


_GML_GRAPH_OPEN = re.compile(r"\bgraph\s*\[")


def _parse_gml(text: str) -> nx.Graph:
    return nx.parse_gml(text, label="id")


def load_gml(source: TextIO) -> Graph:
    """
    Parse a GML document; node ``id`` values become the external labels.

    Raises:
        GraphParseError: malformed GML, or no node blocks
        EmptyGraphError: nodes but no edges
    """
    text = source.read()
    try:
        parsed = _parse_gml(text)
    except nx.NetworkXError as e:
        if "duplicated" not in str(e):
            raise GraphParseError(f"invalid GML: {e}") from e
        # repeated or reversed edge lines; read as a multigraph and let from_edges collapse them
        try:
            parsed = _parse_gml(_GML_GRAPH_OPEN.sub("graph [\n  multigraph 1", text, count=1))
        except (nx.NetworkXError, ValueError, KeyError) as e2:
            raise GraphParseError(f"invalid GML: {e2}") from e2
    except (ValueError, KeyError) as e:
        raise GraphParseError(f"invalid GML: {e}") from e
    if parsed.number_of_nodes() == 0:
        raise GraphParseError("GML document has no node blocks")
    return Graph.from_networkx(parsed)


def load_graph(path, fmt: Optional[str] = None, comment_prefix: str = "#", delimiter: Optional[str] = None) -> Graph:
    """Load from a path; the format defaults to the file extension (.gml or edge list)."""
    fmt = fmt or ("gml" if str(path).lower().endswith(".gml") else "edge-list")
    with open(path, encoding="utf-8") as f:
        try:
            if fmt == "gml":
                return load_gml(f)
            if fmt == "edge-list":
                return load_edge_list(f, comment_prefix=comment_prefix, delimiter=delimiter)
        except UnicodeDecodeError as e:
            raise GraphParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    raise GraphParseError(f"unknown input format {fmt!r}")
