import csv
import io
import json
import random

import pytest

from tdsr.errors import BadParameter, NotConnected
from tdsr.families import cycle_graph, double_star, path_graph, spider, star_graph
from tdsr.graph import Graph, disjoint_union
from tdsr.realize import (
    VerdictRecord,
    _census_graph,
    cycle_runs,
    describe,
    family_stream,
    hunt_d0_gap,
    is_p2_mtds,
    random_tree,
    records_to_csv,
    records_to_json,
    run_suite,
    spider_fixture,
    survey_small_graphs,
    verify_bounds,
    verify_corona_hypercube,
    verify_cycle_d0,
    verify_cycle_lemmas,
    verify_path_d0,
    verify_stem_theorem,
)


def test_verdict_record_serialisation():
    recs = [VerdictRecord("a", "x", [1, 2], [1, 2]), VerdictRecord("b", "y", True, False)]
    assert [r.passed for r in recs] == [True, False]
    data = json.loads(records_to_json(recs))
    assert data[0] == {"claim_id": "a", "instance": "x", "expected": [1, 2], "computed": [1, 2], "pass": True}
    rows = list(csv.reader(io.StringIO(records_to_csv(recs))))
    assert rows[0] == ["claim_id", "instance", "expected", "computed", "pass"]
    assert rows[2] == ["b", "y", "true", "false", "false"]


def test_describe():
    assert describe(path_graph(4)) == "n=4:0-1,1-2,2-3"


@pytest.mark.parametrize("g,side", [(double_star(3, 4), True), (spider([2, 2, 2]), False), (cycle_graph(6), False)])
def test_stem_theorem_examples(g, side):
    rec = verify_stem_theorem(g)
    assert rec.passed
    assert rec.computed == {"connected": side, "unique_mtds": side}


def test_stem_theorem_needs_connected_graph():
    with pytest.raises(NotConnected):
        verify_stem_theorem(disjoint_union([cycle_graph(3), cycle_graph(3)]))


def test_bounds_records_pass_on_examples():
    for g in (cycle_graph(8), spider([2, 2, 2]), star_graph(4), path_graph(5)):
        assert all(r.passed for r in verify_bounds(g))


def test_cycle_and_path_examples():
    rec = verify_cycle_d0(8)
    assert rec.passed and rec.computed == 6
    rec = verify_cycle_d0(12)
    assert rec.passed and rec.computed == 9
    rec = verify_path_d0(5)
    assert rec.passed and rec.computed == 5
    with pytest.raises(BadParameter):
        verify_cycle_d0(17)
    with pytest.raises(BadParameter):
        verify_path_d0(1)


def test_cycle_runs():
    assert cycle_runs(8, 0b00110011) == [(2, 2), (2, 2)]
    assert cycle_runs(6, 0b100001) == [(2, 4)]
    assert is_p2_mtds(6, 0b011011)
    assert not is_p2_mtds(6, 0b000111 | 0b100000)
    with pytest.raises(BadParameter):
        cycle_runs(5, 0)


@pytest.mark.parametrize("n", [8, 12])
def test_cycle_lemmas(n):
    recs = verify_cycle_lemmas(n)
    assert all(r.passed for r in recs)
    assert len(recs) == (3 if n == 8 else 4)


def test_cycle_lemmas_range():
    with pytest.raises(BadParameter):
        verify_cycle_lemmas(10)


@pytest.mark.parametrize("base,counts,top,extra", [
    (path_graph(2), [1, 1], 2, "hypercube"),
    (path_graph(2), [1, 1], 1, "star"),
    (cycle_graph(4), [1, 1, 1, 1], 4, "hypercube"),
    (path_graph(3), [2, 1, 2], 3, None),
])
def test_corona_examples(base, counts, top, extra):
    rec = verify_corona_hypercube(base, counts, top)
    assert rec.passed
    if extra:
        assert rec.computed[extra] is True


def test_corona_budget():
    with pytest.raises(BadParameter):
        verify_corona_hypercube(path_graph(2), [7, 6], 1)


def test_census_examples():
    assert {"k": 3, "family": "cycle", "m": 8} in [{k: e[k] for k in ("k", "family", "m")}
                                                  for e in _census_graph(cycle_graph(4))]
    assert any(e["k"] == 4 and e["m"] == 10 for e in _census_graph(cycle_graph(5)))
    assert any(e["k"] == 3 and e["m"] == 6 and e["family"] == "cycle" for e in _census_graph(star_graph(3)))
    census = survey_small_graphs(6)
    assert census.cycles == [4, 6, 8, 10]
    assert census.paths == [1, 3]
    assert 12 not in census.cycles


def test_hunt_examples():
    hits = hunt_d0_gap(family_stream("cycles", 3, 16), 2)
    assert [h.name for h in hits] == ["C8"]
    assert hits[0].to_json()["gap"] == 2
    assert hunt_d0_gap(family_stream("paths", 2, 16), 2) == []
    assert hunt_d0_gap(family_stream("trees", 4, 10, count=20, seed=1), 1)


def test_random_tree_is_a_tree():
    rng = random.Random(5)
    for n in range(2, 12):
        t = random_tree(n, rng)
        assert t.num_edges == n - 1 and t.is_connected()


def test_family_stream_deterministic_and_validated():
    a = [g for _, g in family_stream("trees", 5, 7, count=3, seed=9)]
    b = [g for _, g in family_stream("trees", 5, 7, count=3, seed=9)]
    assert a == b
    with pytest.raises(BadParameter):
        list(family_stream("wheels", 3, 5))


def test_spider_fixture_passes():
    assert all(r.passed for r in spider_fixture())


def test_parallel_runs_match_sequential():
    assert run_suite("paths", 10, jobs=2) == run_suite("paths", 10, jobs=1)
    assert run_suite("stems", 5, jobs=2) == run_suite("stems", 5, jobs=1)


def test_unknown_suite():
    with pytest.raises(BadParameter):
        run_suite("nope")


def test_analysis_needs_order_three():
    with pytest.raises(BadParameter):
        verify_bounds(Graph.from_edges(2, [(0, 1)]))
