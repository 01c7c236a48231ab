"""Algorithm registry, timed runs and the comparison table."""

import logging
import time
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel

from .baselines import greedy_modularity, lpa
from .core import TraceEvent, detect
from .errors import ConfigError
from .graph import Graph
from .metrics import MetricReport, evaluate
from .partition import Partition
from .published import UNIMPLEMENTED, published_rows

logger = logging.getLogger(__name__)

ALGORITHMS = ("ncb", "lpa", "greedy-modularity")
TABLE_COLUMNS = ["algorithm", "source", "modularity", "nmi", "communities", "time_s"]


def run_algorithm(
    name: str,
    g: Graph,
    seed: int = 0,
    max_iters: int = 100,
    trace: Optional[List[TraceEvent]] = None,
    merge_seeds: bool = False,
) -> Tuple[Partition, float]:
    """
    Run one algorithm and time it (wall clock, parsing excluded).

    Returns:
        (partition, elapsed seconds)
    """
    runners: Dict[str, Callable[[], Partition]] = {
        "ncb": lambda: detect(g, trace=trace, merge_seeds=merge_seeds),
        "lpa": lambda: lpa(g, seed=seed, max_iters=max_iters),
        "greedy-modularity": lambda: greedy_modularity(g),
    }
    if name not in runners:
        raise ConfigError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    start = time.perf_counter()
    partition = runners[name]()
    elapsed = time.perf_counter() - start
    return partition, elapsed


def run_and_evaluate(
    name: str,
    g: Graph,
    ground_truth: Optional[Partition] = None,
    dataset: str = "",
    seed: int = 0,
    max_iters: int = 100,
    trace: Optional[List[TraceEvent]] = None,
    merge_seeds: bool = False,
) -> Tuple[Partition, MetricReport]:
    partition, elapsed = run_algorithm(name, g, seed=seed, max_iters=max_iters, trace=trace, merge_seeds=merge_seeds)
    report = evaluate(g, partition, ground_truth, elapsed=elapsed, algorithm=name, dataset=dataset)
    return partition, report


class ComparisonRow(BaseModel):
    algorithm: str
    source: Literal["run", "published"]
    modularity: Optional[float] = None
    modularity_min: Optional[float] = None
    modularity_max: Optional[float] = None
    nmi: Optional[float] = None
    communities: Optional[int] = None
    time_s: Optional[float] = None

    def table_row(self) -> Dict[str, str]:
        """Rendered cells; a spread over repeated runs shows as mean[min,max]."""
        if self.modularity is None:
            q = ""
        elif self.modularity_min is not None and self.modularity_max is not None:
            q = f"{self.modularity:.3f}[{self.modularity_min:.3f},{self.modularity_max:.3f}]"
        else:
            q = f"{self.modularity:.3f}"
        return {
            "algorithm": self.algorithm,
            "source": self.source,
            "modularity": q,
            "nmi": "" if self.nmi is None else f"{self.nmi:.3f}",
            "communities": "" if self.communities is None else str(self.communities),
            "time_s": "" if self.time_s is None else f"{self.time_s:.2f}",
        }


def compare(
    g: Graph,
    algorithms: Sequence[str] = ALGORITHMS,
    ground_truth: Optional[Partition] = None,
    dataset: str = "",
    repeats: int = 5,
    seed: int = 0,
    max_iters: int = 100,
    include_published: bool = True,
    merge_seeds: bool = False,
) -> List[ComparisonRow]:
    """
    Run every requested algorithm on the same graph.

    LPA is repeated with seeds seed..seed+repeats-1: modularity is reported
    as mean with its min/max, NMI as the best run. Published rows for
    algorithms not implemented here follow the live rows.
    """
    if repeats < 1:
        raise ConfigError("repeats must be >= 1")
    rows: List[ComparisonRow] = []
    for name in algorithms:
        if name == "lpa":
            reports = [
                run_and_evaluate(name, g, ground_truth, dataset, seed=seed + r, max_iters=max_iters)[1]
                for r in range(repeats)
            ]
            qs = [r.modularity for r in reports]
            rows.append(
                ComparisonRow(
                    algorithm=name,
                    source="run",
                    modularity=float(np.mean(qs)),
                    modularity_min=min(qs) if repeats > 1 else None,
                    modularity_max=max(qs) if repeats > 1 else None,
                    nmi=None if ground_truth is None else max(r.nmi for r in reports),
                    communities=int(round(np.mean([r.community_count for r in reports]))),
                    time_s=round(float(np.mean([r.elapsed for r in reports])), 2),
                )
            )
        else:
            _, report = run_and_evaluate(
                name, g, ground_truth, dataset, seed=seed, max_iters=max_iters, merge_seeds=merge_seeds
            )
            rows.append(
                ComparisonRow(
                    algorithm=name,
                    source="run",
                    modularity=report.modularity,
                    nmi=report.nmi,
                    communities=report.community_count,
                    time_s=report.elapsed,
                )
            )

    if include_published and dataset:
        for result in published_rows(dataset, UNIMPLEMENTED):
            rows.append(
                ComparisonRow(
                    algorithm=result.algorithm,
                    source="published",
                    modularity=result.modularity,
                    communities=result.communities,
                    time_s=result.time_s,
                )
            )
    return rows


def comparison_frame(rows: Sequence[ComparisonRow]) -> pd.DataFrame:
    return pd.DataFrame([row.table_row() for row in rows], columns=TABLE_COLUMNS)
