import io
import json

import pytest

from conftest import build
from ncb.conductance import profile
from ncb.core import TraceEvent, detect
from ncb.errors import GraphParseError, PartitionMismatchError
from ncb.io import read_partition, read_trace, write_partition, write_profile, write_records, write_trace
from ncb.metrics import evaluate


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_partition_round_trip(karate, tmp_path, fmt):
    partition = detect(karate)
    path = tmp_path / f"karate.{fmt}"
    write_partition(karate, partition, path)
    back = read_partition(karate, path)
    assert back.assignment == partition.assignment
    back.validate(karate)


def test_json_layout(karate, tmp_path):
    partition = detect(karate)
    path = tmp_path / "p.json"
    write_partition(karate, partition, path, "json")
    payload = json.loads(path.read_text())
    assert sorted(label for members in payload["communities"] for label in members) == sorted(karate.labels)
    assert payload["communities"][0][0] == "0"


def test_truth_file(karate, data_dir, karate_truth):
    truth = read_partition(karate, data_dir / "karate_truth.csv")
    assert truth.same_grouping(karate_truth)


def test_unknown_node(karate, tmp_path):
    path = tmp_path / "p.csv"
    path.write_text("node,community\n" + "".join(f"{v},0\n" for v in range(34)) + "ghost,1\n")
    with pytest.raises(PartitionMismatchError):
        read_partition(karate, path)


def test_missing_node(karate, tmp_path):
    path = tmp_path / "p.csv"
    path.write_text("node,community\n" + "".join(f"{v},0\n" for v in range(33)))
    with pytest.raises(PartitionMismatchError):
        read_partition(karate, path)


def test_duplicate_node_in_json(karate, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"communities": [[str(v) for v in range(34)], ["3"]]}))
    with pytest.raises(PartitionMismatchError):
        read_partition(karate, path)


def test_bad_columns(karate, tmp_path):
    path = tmp_path / "p.csv"
    path.write_text("vertex,group\n0,0\n")
    with pytest.raises(GraphParseError):
        read_partition(karate, path)


def test_non_integer_community(tmp_path):
    g = build([(0, 1)])
    path = tmp_path / "p.csv"
    path.write_text("node,community\n0,0\n1,x\n")
    with pytest.raises(GraphParseError) as err:
        read_partition(g, path)
    assert err.value.line == 3


@pytest.mark.parametrize("suffix", ["csv", "json"])
def test_non_utf8_partition_file(karate, tmp_path, suffix):
    path = tmp_path / f"p.{suffix}"
    path.write_bytes(b"\xff\xfe")
    with pytest.raises(GraphParseError, match="UTF-8"):
        read_partition(karate, path)


def test_profile_csv_marks_undefined():
    out = io.StringIO()
    write_profile(profile(build([(0, 1)])), out)
    assert out.getvalue().splitlines() == ["node,degree,conductance", "0,1,", "1,1,"]


def test_trace_file(tmp_path):
    events = [TraceEvent(kind="accept", node=3, community=0, gravitation=1.0, epsilon=0.25)]
    path = tmp_path / "trace.jsonl"
    write_trace(events, path)
    assert read_trace(path) == [
        {"kind": "accept", "node": 3, "community": 0, "gravitation": 1.0, "epsilon": 0.25}
    ]


def test_records_json(karate, karate_truth):
    out = io.StringIO()
    write_records([evaluate(karate, karate_truth, dataset="karate")], out, "json")
    rows = json.loads(out.getvalue())
    assert rows[0]["dataset"] == "karate"
    assert rows[0]["community_count"] == 2
