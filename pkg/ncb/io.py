"""
Reading and writing partitions, profiles, traces and report tables.

Partition CSV: header ``node,community``, one row per node label, dense
community ids. Partition JSON: ``{"communities": [[label, ...], ...]}`` with the
list index as community id.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Union

import pandas as pd
from pydantic import BaseModel

from .conductance import ProfileRecord
from .errors import GraphParseError, PartitionMismatchError
from .graph import Graph
from .partition import Partition

logger = logging.getLogger(__name__)

PathOrStream = Union[str, Path, TextIO]


def _format_for(path: Union[str, Path], fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return "json" if str(path).lower().endswith(".json") else "csv"


def write_partition(g: Graph, p: Partition, path: Union[str, Path], fmt: Optional[str] = None) -> None:
    fmt = _format_for(path, fmt)
    if fmt == "json":
        payload = {"communities": [[g.labels[v] for v in members] for members in p.members()]}
        Path(path).write_text(json.dumps(payload, indent=2), encoding="utf-8")
    else:
        df = pd.DataFrame({"node": list(g.labels), "community": p.assignment})
        df.to_csv(path, index=False)
    logger.info(f"Partition with {len(p)} communities written to {path}")


def _groups_to_partition(g: Graph, groups: Dict[int, List[int]]) -> Partition:
    covered = sum(len(members) for members in groups.values())
    if covered != g.n:
        raise PartitionMismatchError(f"partition file covers {covered} of {g.n} nodes")
    return Partition.from_groups(g, (groups[c] for c in sorted(groups)))


def _node_ids(g: Graph, labels: Iterable[str]) -> List[int]:
    ids = []
    for label in labels:
        if not g.has_label(label):
            raise PartitionMismatchError(f"partition file names unknown node {label!r}")
        ids.append(g.node_id(label))
    if len(set(ids)) != len(ids):
        raise PartitionMismatchError("partition file lists a node more than once")
    return ids


def read_partition(g: Graph, path: Union[str, Path], fmt: Optional[str] = None) -> Partition:
    """
    Load a partition (ground truth or a previous output) against graph g.

    Community ids found in the file are kept, in ascending order, so a
    written partition reads back identically.

    Raises:
        GraphParseError: unreadable file or missing columns
        PartitionMismatchError: unknown, duplicate or missing nodes
    """
    fmt = _format_for(path, fmt)
    groups: Dict[int, List[int]] = {}
    if fmt == "json":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
            communities = payload["communities"]
        except UnicodeDecodeError as e:
            raise GraphParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise GraphParseError(f"invalid partition JSON {path}: {e}") from e
        seen: List[int] = []
        for cid, labels in enumerate(communities):
            ids = _node_ids(g, [str(label) for label in labels])
            groups[cid] = ids
            seen.extend(ids)
        if len(set(seen)) != len(seen):
            raise PartitionMismatchError("partition file lists a node more than once")
        return _groups_to_partition(g, groups)

    try:
        df = pd.read_csv(path, dtype=str, encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GraphParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise GraphParseError(f"invalid partition CSV {path}: {e}") from e
    if "node" not in df.columns or "community" not in df.columns:
        raise GraphParseError(f"partition CSV {path} needs 'node' and 'community' columns, found {list(df.columns)}")
    ids = _node_ids(g, df["node"].str.strip())
    for row, (v, raw) in enumerate(zip(ids, df["community"]), start=2):
        try:
            cid = int(str(raw).strip())
        except ValueError:
            raise GraphParseError(f"community id {raw!r} is not an integer", line=row) from None
        groups.setdefault(cid, []).append(v)
    return _groups_to_partition(g, groups)


def profile_frame(records: Sequence[ProfileRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "node": [r.label for r in records],
            "degree": [r.degree for r in records],
            "conductance": pd.array([r.conductance for r in records], dtype="Float64"),
        }
    )


def write_profile(records: Sequence[ProfileRecord], out: PathOrStream) -> None:
    """CSV with header node,degree,conductance; undefined conductance is an empty field."""
    profile_frame(records).to_csv(out, index=False, na_rep="")


def write_degree_distribution(rows: Sequence[tuple], out: PathOrStream) -> None:
    pd.DataFrame(rows, columns=["degree", "count"]).to_csv(out, index=False)


def write_trace(events: Iterable[BaseModel], path: Union[str, Path]) -> None:
    """One JSON object per line."""
    with open(path, "w", encoding="utf-8") as f:
        for event in events:
            f.write(event.model_dump_json() + "\n")


def read_trace(path: Union[str, Path]) -> List[dict]:
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def write_records(rows: Sequence[BaseModel], out: PathOrStream, fmt: str = "csv") -> None:
    """Serialize pydantic rows (reports, comparison rows) as CSV or a JSON array."""
    data = [row.model_dump() for row in rows]
    if fmt == "json":
        text = json.dumps(data, indent=2)
        if isinstance(out, (str, Path)):
            Path(out).write_text(text, encoding="utf-8")
        else:
            out.write(text + "\n")
        return
    pd.DataFrame(data).to_csv(out, index=False, na_rep="")
