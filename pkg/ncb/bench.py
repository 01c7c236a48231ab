"""
Empirical scaling of NCB on planted-partition graphs.

Graphs are grown by adding blocks while the expected inter-block degree
stays fixed, so the edge count grows linearly with the number of blocks.
"""

import logging
import math
import time
from typing import List, Sequence

import networkx as nx
import numpy as np
from pydantic import BaseModel, ValidationError, field_validator

from .core import detect
from .errors import ConfigError
from .graph import Graph

logger = logging.getLogger(__name__)


class BenchModel(BaseModel):
    block_size: int
    p_in: float
    inter_degree: float

    @field_validator("block_size")
    @classmethod
    def _block_size(cls, v: int) -> int:
        if v < 2:
            raise ValueError("block_size must be >= 2")
        return v

    @field_validator("p_in")
    @classmethod
    def _p_in(cls, v: float) -> float:
        if not 0.0 < v <= 1.0:
            raise ValueError("p_in must be in (0, 1]")
        return v

    @field_validator("inter_degree")
    @classmethod
    def _inter_degree(cls, v: float) -> float:
        if v < 0.0:
            raise ValueError("inter_degree must be >= 0")
        return v

    @classmethod
    def create(cls, **kwargs) -> "BenchModel":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ConfigError(str(e)) from e

    def p_out(self, blocks: int) -> float:
        outside = (blocks - 1) * self.block_size
        if outside == 0:
            return 0.0
        p = self.inter_degree / outside
        if p > 1.0:
            raise ConfigError(f"inter_degree {self.inter_degree} infeasible with {blocks} blocks of {self.block_size}")
        return p


class BenchRow(BaseModel):
    blocks: int
    nodes: int
    edges: int
    seconds: float
    communities: int


class ScalingReport(BaseModel):
    rows: List[BenchRow]
    doubling_ratios: List[float]
    mean_doubling_ratio: float
    exponent: float


def planted_partition(model: BenchModel, blocks: int, seed: int) -> Graph:
    """Planted-partition graph with ``blocks`` groups; equal seeds give equal graphs."""
    if blocks < 1:
        raise ConfigError("block count must be >= 1")
    nx_graph = nx.planted_partition_graph(blocks, model.block_size, model.p_in, model.p_out(blocks), seed=seed)
    return Graph.from_networkx(nx_graph)


def run_bench(sizes: Sequence[int], model: BenchModel, repeats: int = 3, seed: int = 42) -> ScalingReport:
    """
    Time ``detect`` over graphs of increasing block count.

    Each size is timed ``repeats`` times (median kept). Consecutive sizes
    give a runtime ratio normalized to an exact doubling of the edge count;
    a log-log fit over all sizes gives the growth exponent.

    Raises:
        ConfigError: repeats < 1, fewer than two sizes, or infeasible model
    """
    if repeats < 1:
        raise ConfigError("repeats must be >= 1")
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ConfigError("bench needs at least two positive block counts")

    graphs = [(blocks, planted_partition(model, blocks, seed)) for blocks in sorted(sizes)]
    # warm-up on the smallest graph
    detect(graphs[0][1])

    rows: List[BenchRow] = []
    for blocks, g in graphs:
        timings = []
        communities = 0
        for _ in range(repeats):
            start = time.perf_counter()
            partition = detect(g)
            timings.append(time.perf_counter() - start)
            communities = len(partition)
        rows.append(
            BenchRow(blocks=blocks, nodes=g.n, edges=g.m, seconds=float(np.median(timings)), communities=communities)
        )
        logger.info(f"bench blocks={blocks}: n={g.n}, m={g.m}, {rows[-1].seconds:.3f}s")

    ratios = []
    for prev, cur in zip(rows, rows[1:]):
        growth = cur.edges / prev.edges
        if growth <= 1.0 or prev.seconds <= 0.0:
            continue
        ratios.append((cur.seconds / prev.seconds) ** (math.log(2.0) / math.log(growth)))

    edges = np.log([r.edges for r in rows])
    seconds = np.log([max(r.seconds, 1e-9) for r in rows])
    exponent = float(np.polyfit(edges, seconds, 1)[0])

    return ScalingReport(
        rows=rows,
        doubling_ratios=ratios,
        mean_doubling_ratio=float(np.mean(ratios)) if ratios else float("nan"),
        exponent=exponent,
    )
