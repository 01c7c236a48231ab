import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field
from sklearn.metrics import normalized_mutual_info_score

from .errors import PartitionMismatchError
from .graph import Graph
from .partition import Partition

logger = logging.getLogger(__name__)


class MetricReport(BaseModel):
    algorithm: str
    dataset: str
    modularity: float = Field(ge=-0.5, le=1.0)
    nmi: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    community_count: int = Field(ge=1)
    elapsed: float = Field(ge=0.0)


def _check(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise PartitionMismatchError(f"partition covers {p.n} nodes, graph has {g.n}")
    if not p.is_total():
        raise PartitionMismatchError("partition has unassigned nodes")


def modularity(g: Graph, p: Partition) -> float:
    """
    Newman-Girvan modularity Q = sum_c [e_c / m - (d_c / 2m)^2].

    Accumulated as the exact integer sum_c (4m * e_c - d_c^2) and divided once
    by 4m^2.
    """
    _check(g, p)
    labels = p.labels_array()
    k = int(labels.max()) + 1
    edges = g.edge_array()
    same = labels[edges[:, 0]] == labels[edges[:, 1]]
    internal = np.bincount(labels[edges[same, 0]], minlength=k)
    degree_sums = np.bincount(labels, weights=g.degree_array(), minlength=k).astype(np.int64)
    four_m = 2 * g.total_volume
    numerator = sum(four_m * int(e) - int(d) * int(d) for e, d in zip(internal, degree_sums))
    return numerator / (g.total_volume**2)


def nmi(p1: Partition, p2: Partition) -> float:
    """Normalized mutual information, arithmetic-mean normalization, natural log."""
    if p1.n != p2.n:
        raise PartitionMismatchError(f"partitions cover {p1.n} and {p2.n} nodes")
    if not (p1.is_total() and p2.is_total()):
        raise PartitionMismatchError("partition has unassigned nodes")
    score = normalized_mutual_info_score(p1.labels_array(), p2.labels_array(), average_method="arithmetic")
    return float(min(1.0, max(0.0, score)))


def evaluate(
    g: Graph,
    p: Partition,
    ground_truth: Optional[Partition] = None,
    elapsed: float = 0.0,
    algorithm: str = "ncb",
    dataset: str = "",
) -> MetricReport:
    """Assemble one comparison row; nmi is filled only when a ground truth is given."""
    report = MetricReport(
        algorithm=algorithm,
        dataset=dataset,
        modularity=modularity(g, p),
        nmi=None if ground_truth is None else nmi(p, ground_truth),
        community_count=len(p),
        elapsed=round(elapsed, 2),
    )
    logger.info(
        f"{algorithm} on {dataset or 'graph'}: Q={report.modularity:.4f}, "
        f"communities={report.community_count}, time={report.elapsed:.2f}s"
    )
    return report
