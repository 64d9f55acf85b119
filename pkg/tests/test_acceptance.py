"""One test per acceptance criterion, named ``test_criterion_<NN>_...``.

conftest.py prints a PASS/FAIL line per criterion at the end of the run.
"""

import time

import pytest

from tdsr.domination import (
    Gamma_t_closed,
    domination_profile,
    enumerate_tds,
    gamma_t_closed,
    is_mtds,
    is_mtds_epn,
    is_mtds_naive,
    mtds_masks,
)
from tdsr.families import cycle_graph, path_graph
from tdsr.realize import (
    Analysis,
    corona_cases,
    describe,
    spider_fixture,
    verify_census,
    verify_corona_hypercube,
    verify_cycle_d0,
    verify_graph,
    verify_named_isomorphisms,
    verify_path_d0,
    verify_stem_theorem,
)
from tdsr.reconfig import build, connectivity_profile


def _report(num, records):
    failed = [r for r in records if not r.passed]
    print(f"criterion {num:2d}: {'PASS' if not failed else 'FAIL'} "
          f"({len(records) - len(failed)}/{len(records)} verdicts)")
    for r in failed[:10]:
        print(f"  {r.claim} {r.instance}: expected {r.expected!r}, computed {r.computed!r}")
    return failed


def test_criterion_01_closed_forms():
    start = time.perf_counter()
    mismatches = []
    for kind, lo in (("path", 2), ("cycle", 3)):
        for n in range(lo, 15):
            g = path_graph(n) if kind == "path" else cycle_graph(n)
            prof = domination_profile(g)
            want = (gamma_t_closed(kind, n), Gamma_t_closed(kind, n))
            if (prof.gamma_t, prof.Gamma_t) != want:
                mismatches.append((kind, n, want, (prof.gamma_t, prof.Gamma_t)))
    elapsed = time.perf_counter() - start
    print(f"criterion  1: {'PASS' if not mismatches and elapsed < 10 else 'FAIL'} ({elapsed:.2f}s)")
    assert not mismatches
    assert elapsed < 10


def test_criterion_02_cycle_d0():
    start = time.perf_counter()
    records = [verify_cycle_d0(n) for n in range(3, 17)]
    elapsed = time.perf_counter() - start
    assert not _report(2, records)
    assert {r.instance: r.computed for r in records}["C8"] == 6
    assert elapsed < 60


def test_criterion_03_path_d0():
    records = [verify_path_d0(n) for n in range(2, 17)]
    assert not _report(3, records)
    values = {r.instance: r.computed for r in records}
    assert values["P2"] == values["P4"] == 2


def test_criterion_04_stem_theorem(corpus8):
    start = time.perf_counter()
    assert sum(1 for g in corpus8 if g.n == 8) == 11117
    records = [verify_stem_theorem(g) for g in corpus8]
    elapsed = time.perf_counter() - start
    assert not _report(4, records)
    assert elapsed < 600


def test_criterion_05_bounds(corpus8):
    records = [r for g in corpus8 for r in verify_graph(g)[1:]]
    assert not _report(5, records)


def test_criterion_06_named_isomorphisms():
    assert not _report(6, verify_named_isomorphisms(8))


def test_criterion_07_corona_hypercube():
    cases = [(base, counts, top) for base, counts, top in corona_cases(6) if set(counts) == {1}]
    assert {base.n for base, _, _ in cases} == {2, 3, 4}
    assert not _report(7, [verify_corona_hypercube(*case) for case in cases])


def test_criterion_08_census():
    start = time.perf_counter()
    census, records = verify_census(6)
    elapsed = time.perf_counter() - start
    assert not _report(8, records)
    assert elapsed < 900


def test_criterion_09_spider():
    assert not _report(9, spider_fixture())


def test_criterion_10_oracle_agreement(corpus8):
    disagreements = []
    for g in corpus8:
        minimal = set(mtds_masks(g).tolist())
        for s in enumerate_tds(g):
            a, b, c = is_mtds(g, s), is_mtds_epn(g, s), is_mtds_naive(g, s)
            if not a == b == c == (s in minimal):
                disagreements.append(("is_mtds", describe(g), hex(s)))
        profile = connectivity_profile(g)
        for k in range(g.n + 1):
            if build(g, k).num_components() != profile[k]:
                disagreements.append(("components", describe(g), k))
        gamma_big = Analysis.of(g).Gamma_t
        for k in range(gamma_big, g.n):
            if profile[k] == 1 and profile[k + 1] != 1:
                disagreements.append(("monotone", describe(g), k))
    print(f"criterion 10: {'PASS' if not disagreements else 'FAIL'} ({len(disagreements)} disagreements)")
    assert not disagreements[:20]
