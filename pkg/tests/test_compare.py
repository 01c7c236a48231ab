import pytest

from ncb.compare import ComparisonRow, compare, comparison_frame, run_algorithm
from ncb.errors import ConfigError
from ncb.published import LPA_MODULARITY_RANGE, published, published_rows


def test_published_lookup():
    assert published("FastUnfolding", "Karate").modularity == 0.419
    assert published("ncb", "brightkite").communities == 1260
    assert published("infomap", "twitter").time_s == pytest.approx(51.663)
    assert published("infomap", "unknown") is None
    assert [r.algorithm for r in published_rows("karate")] == ["infomap", "fastunfolding"]
    assert LPA_MODULARITY_RANGE["dolphins"] == (0.373, 0.502)


def test_unknown_algorithm(karate):
    with pytest.raises(ConfigError):
        run_algorithm("walktrap", karate)


def test_compare_rows(karate, karate_truth):
    rows = compare(karate, ground_truth=karate_truth, dataset="karate", repeats=3)
    assert [(r.algorithm, r.source) for r in rows] == [
        ("ncb", "run"),
        ("lpa", "run"),
        ("greedy-modularity", "run"),
        ("infomap", "published"),
        ("fastunfolding", "published"),
    ]
    lpa_row = rows[1]
    assert lpa_row.modularity_min <= lpa_row.modularity <= lpa_row.modularity_max
    assert all(r.nmi is not None for r in rows if r.source == "run")


def test_compare_without_dataset_skips_published(karate):
    rows = compare(karate, algorithms=["ncb"], repeats=1)
    assert len(rows) == 1
    assert rows[0].nmi is None


def test_compare_zero_repeats(karate):
    with pytest.raises(ConfigError):
        compare(karate, repeats=0)


def test_table_rendering():
    row = ComparisonRow(
        algorithm="lpa", source="run", modularity=0.3451, modularity_min=0.1321, modularity_max=0.4019,
        communities=3, time_s=0.01,
    )
    assert row.table_row()["modularity"] == "0.345[0.132,0.402]"
    frame = comparison_frame([row, ComparisonRow(algorithm="infomap", source="published", modularity=0.402)])
    assert list(frame.columns) == ["algorithm", "source", "modularity", "nmi", "communities", "time_s"]
    assert frame.loc[1, "nmi"] == ""
