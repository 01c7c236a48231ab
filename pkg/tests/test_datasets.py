"""Checks on the downloadable evaluation networks; skipped when the files are absent."""

import pytest

from conftest import DATA
from ncb.baselines import greedy_modularity
from ncb.conductance import conductance, profile
from ncb.core import detect, stability
from ncb.graph import load_graph
from ncb.metrics import modularity
from ncb.published import DATASET_SIZES, published


def _load_or_skip(name):
    path = DATA / name
    if not path.exists():
        pytest.skip(f"{name} not downloaded (see README)")
    return load_graph(path)


def test_dolphins_size():
    g = _load_or_skip("dolphins.gml")
    assert (g.n, g.m) == DATASET_SIZES["dolphins"]


def test_dolphins_hub_profile():
    g = _load_or_skip("dolphins.gml")
    records = profile(g)
    top = max(records, key=lambda r: r.degree)
    assert top.degree == 12
    assert top.conductance is not None


@pytest.mark.parametrize("name", ["dolphins.gml", "football.gml"])
def test_partitions_are_valid(name):
    g = _load_or_skip(name)
    ncb = detect(g)
    ncb.validate(g)
    assert modularity(g, ncb) > 0.0
    greedy = greedy_modularity(g)
    greedy.validate(g)
    assert modularity(g, greedy) > 0.3


def test_football_greedy_near_reference():
    g = _load_or_skip("football.gml")
    assert modularity(g, greedy_modularity(g)) == pytest.approx(published("cnm", "football").modularity, abs=0.03)


@pytest.mark.parametrize("name", ["karate.gml", "dolphins.gml", "football.gml"])
def test_detected_stability_is_one_minus_conductance(name):
    g = _load_or_skip(name)
    checked = 0
    for c in detect(g).communities:
        if 0 < c.degree_sum <= g.total_volume - c.degree_sum:
            assert stability(c) == 1 - conductance(g, c.members)
            checked += 1
    assert checked > 0
