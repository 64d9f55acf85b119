"""Mechanical checks of the structural results on total dominating graphs.

Every ``verify_*`` function returns :class:`VerdictRecord` objects rather than
raising when a claim fails; callers decide what a failure means.  The
``suite_*`` functions bundle the checks used by ``tdsr verify``.
"""

from __future__ import annotations

import csv
import io
import json
import random
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .domination import (
    Gamma_t_closed,
    domination_profile,
    gamma_t_closed,
    has_Gamma_n_minus_1_structure,
    is_mtds,
    is_tds,
    mtds_masks,
    stems,
)
from .errors import BadParameter
from .families import (
    complete_graph,
    cycle_graph,
    generalized_corona,
    hypercube,
    hypercube_levels,
    path_graph,
    remove_closed_nbhd,
    spider,
    star_graph,
)
from .graph import Graph, set_label
from .iso import is_isomorphic, matches_family
from .reconfig import build, component_labels, connectivity_profile, d0
from .smallgraphs import connected_corpus, graphs_without_small_components


@dataclass(frozen=True)
class VerdictRecord:
    claim: str
    instance: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim,
            "instance": self.instance,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


def records_to_json(records: Iterable[VerdictRecord]) -> str:
    return json.dumps([r.to_json() for r in records], separators=(",", ":"))


def records_to_csv(records: Iterable[VerdictRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim_id", "instance", "expected", "computed", "pass"])
    for r in records:
        writer.writerow([r.claim, r.instance,
                         json.dumps(r.expected, separators=(",", ":")),
                         json.dumps(r.computed, separators=(",", ":")),
                         "true" if r.passed else "false"])
    return buf.getvalue()


def describe(g: Graph) -> str:
    """Compact, deterministic instance label: ``n=4:0-1,1-2,2-3``."""
    return f"n={g.n}:" + ",".join(f"{u}-{v}" for u, v in g.edges)


def _map(fn: Callable, items: list, jobs: int = 1) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


# --- per-graph analysis ------------------------------------------------------------------

@dataclass(frozen=True)
class Analysis:
    """Everything the general theorems talk about, computed once per graph."""

    graph: Graph
    gamma_t: int
    Gamma_t: int
    num_mtds: int
    stems_tds: bool
    components_by_k: tuple[int, ...]
    d0: int
    n_minus_1_structure: bool

    @classmethod
    def of(cls, g: Graph) -> Analysis:
        g.require_connected()
        if g.n < 3:
            raise BadParameter("the general bounds need order at least 3")
        prof = domination_profile(g)
        comps = connectivity_profile(g)
        bad = [k for k, c in enumerate(comps) if c != 1]
        return cls(
            graph=g,
            gamma_t=prof.gamma_t,
            Gamma_t=prof.Gamma_t,
            num_mtds=prof.num_mtds,
            stems_tds=is_tds(g, stems(g)),
            components_by_k=tuple(comps),
            d0=max(bad) + 1 if bad else 0,
            n_minus_1_structure=has_Gamma_n_minus_1_structure(g),
        )


def verify_stem_theorem(g: Graph, analysis: Analysis | None = None) -> VerdictRecord:
    """D_{Gamma_t}^t(g) is connected iff the stems of ``g`` form a TDS, and
    it is disconnected iff ``g`` has at least two minimal TDSs."""
    a = analysis or Analysis.of(g)
    return VerdictRecord(
        "stem_theorem",
        describe(g),
        {"connected": a.stems_tds, "unique_mtds": a.stems_tds},
        {"connected": a.components_by_k[a.Gamma_t] == 1, "unique_mtds": a.num_mtds == 1},
    )


def verify_bounds(g: Graph, analysis: Analysis | None = None) -> list[VerdictRecord]:
    a = analysis or Analysis.of(g)
    n, inst = g.n, describe(g)
    delta = g.min_degree()
    gamma_cap = n - 1 if delta < 2 else min(n - 1, n - delta + 1)
    out = [
        VerdictRecord("gamma_t_at_most_2n_over_3", inst, True, 3 * a.gamma_t <= 2 * n),
        VerdictRecord("Gamma_t_upper_bound", inst, True, a.Gamma_t <= gamma_cap),
        VerdictRecord("d0_between_Gamma_t_and_n", inst, True, a.Gamma_t <= a.d0 <= n),
        VerdictRecord("d0_equals_n_characterisation", inst,
                      {"Gamma_t_is_n_minus_1": a.d0 == n, "structure": a.d0 == n},
                      {"Gamma_t_is_n_minus_1": a.Gamma_t == n - 1,
                       "structure": a.n_minus_1_structure}),
        VerdictRecord("d0_equals_Gamma_t_characterisation", inst,
                      {"unique_mtds": a.d0 == a.Gamma_t, "stems_tds": a.d0 == a.Gamma_t},
                      {"unique_mtds": a.num_mtds == 1, "stems_tds": a.stems_tds}),
    ]
    if a.Gamma_t < n - 1:
        out.append(VerdictRecord("d0_at_most_min_bound", inst, True,
                                 a.d0 <= min(n - 1, a.Gamma_t + a.gamma_t)))
    return out


def verify_graph(g: Graph) -> list[VerdictRecord]:
    a = Analysis.of(g)
    return [verify_stem_theorem(g, a)] + verify_bounds(g, a)


# --- paths and cycles ---------------------------------------------------------------------

def _check_range(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise BadParameter(f"{what} needs {lo} <= n <= {hi}, got {n}")


def verify_cycle_d0(n: int) -> VerdictRecord:
    _check_range(n, 3, 16, "cycle check")
    big = Gamma_t_closed("cycle", n)
    expected = big + 2 if n == 8 else big + 1
    return VerdictRecord("cycle_d0", f"C{n}", expected, d0(cycle_graph(n)))


def verify_path_d0(n: int) -> VerdictRecord:
    _check_range(n, 2, 16, "path check")
    expected = 2 if n in (2, 4) else Gamma_t_closed("path", n) + 1
    return VerdictRecord("path_d0", f"P{n}", expected, d0(path_graph(n)))


def verify_closed_forms(kind: str, n: int) -> VerdictRecord:
    g = cycle_graph(n) if kind == "cycle" else path_graph(n)
    prof = domination_profile(g)
    return VerdictRecord(f"{kind}_closed_forms", f"{kind[0].upper()}{n}",
                         [gamma_t_closed(kind, n), Gamma_t_closed(kind, n)],
                         [prof.gamma_t, prof.Gamma_t])


def cycle_runs(n: int, s: int) -> list[tuple[int, int]]:
    """``(run, gap)`` pairs going round C_n from a run start: each run of
    consecutive members of ``s`` with the number of non-members after it."""
    full = (1 << n) - 1
    if s in (0, full):
        raise BadParameter("cycle_runs needs a proper nonempty subset")
    inside = [bool(s >> i & 1) for i in range(n)]
    start = next(i for i in range(n) if inside[i] and not inside[i - 1])
    runs = []
    i = 0
    while i < n:
        run = 0
        while i < n and inside[(start + i) % n]:
            run += 1
            i += 1
        gap = 0
        while i < n and not inside[(start + i) % n]:
            gap += 1
            i += 1
        runs.append((run, gap))
    return runs


def is_p2_mtds(n: int, s: int) -> bool:
    return is_mtds(cycle_graph(n), s) and all(run == 2 for run, _ in cycle_runs(n, s))


def verify_cycle_lemmas(n: int) -> list[VerdictRecord]:
    """Reconfiguration facts about C_{4k}: disconnection one above gamma_t,
    and which families of sets are joined at 2k+2 and 2k+3."""
    if n % 4 or not 8 <= n <= 16:
        raise BadParameter(f"cycle lemmas need n = 0 mod 4 with 8 <= n <= 16, got {n}")
    g, k, inst = cycle_graph(n), n // 4, f"C{n}"
    comps = connectivity_profile(g)
    prof = domination_profile(g)
    out = [VerdictRecord("cycle_lemma_disconnected_at_2k+1", inst, True, comps[2 * k + 1] > 1)]

    labels = component_labels(g, 2 * k + 2)
    out.append(VerdictRecord("cycle_lemma_gamma_sets_joined_at_2k+2", inst, 1,
                             len({labels[s] for s in prof.gamma_t_sets})))

    p2 = [int(s) for s in mtds_masks(g)
          if int(s).bit_count() in (2 * k, 2 * k + 2)
          and all(run == 2 for run, _ in cycle_runs(n, int(s)))]
    labels = component_labels(g, 2 * k + 3)
    out.append(VerdictRecord("cycle_lemma_p2_sets_joined_at_2k+3", inst, 1,
                             len({labels[s] for s in p2})))

    if n >= 12:
        witness = [s for s in p2 if s.bit_count() == 2 * k + 2
                   and sum(1 for _, gap in cycle_runs(n, s) if gap == 1) == 4]
        out.append(VerdictRecord("cycle_lemma_p2_mtds_with_four_short_gaps", inst, True,
                                 bool(witness)))
    return out


# --- generalized coronas and hypercubes ---------------------------------------------------

def verify_corona_hypercube(base: Graph, leaf_counts, top: int) -> VerdictRecord:
    """D_{r+top}^t of a generalized corona is the bottom ``top + 1`` levels of
    Q_n, n being the number of leaves."""
    counts = list(leaf_counts) if leaf_counts else [1] * base.n
    g = generalized_corona(base, counts)
    r, n = base.n, sum(counts)
    if n > 12:
        raise BadParameter(f"{n} leaves exceed the explicit-build budget of 12")
    _check_range(top, 0, n, "level")
    dk = build(g, r + top)
    h = dk.as_graph()
    core = (1 << r) - 1
    leaf_sets = [s & ~core for s in dk.vertices]
    direct = (all(s & core == core for s in dk.vertices)
              and sorted(leaf_sets) == sorted(m << r for m in range(1 << n)
                                              if m.bit_count() <= top))
    computed = {"levels": is_isomorphic(h, hypercube_levels(n, top)), "direct": direct}
    expected = {"levels": True, "direct": True}
    if top == n:
        computed["hypercube"] = is_isomorphic(h, hypercube(n))
        expected["hypercube"] = True
    if top == 1:
        computed["star"] = matches_family(h, "star") == {"m": n}
        expected["star"] = True
    return VerdictRecord("corona_hypercube", f"{describe(base)}@{counts}/l={top}",
                         expected, computed)


# --- named small isomorphisms -------------------------------------------------------------

def _k3_with_pendant_edge() -> Graph:
    # K_{1,3} with two leaves joined, i.e. a triangle with a pendant vertex.
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def named_isomorphism_cases(max_complete: int = 8) -> list[tuple[str, Graph, int, Graph]]:
    cases = [
        ("D4(P4)~C4", path_graph(4), 4, cycle_graph(4)),
        ("D3(C4)~C8", cycle_graph(4), 3, cycle_graph(8)),
        ("D5(P6)~C8", path_graph(6), 5, cycle_graph(8)),
        ("D4(C5)~C10", cycle_graph(5), 4, cycle_graph(10)),
        ("D3(C3)~K1,3", cycle_graph(3), 3, star_graph(3)),
        ("D3(K1,3)~C6", star_graph(3), 3, cycle_graph(6)),
        ("D3(K1,3+e)~C6", _k3_with_pendant_edge(), 3, cycle_graph(6)),
        ("D3(P3)~P3", path_graph(3), 3, path_graph(3)),
        ("D3(P4)~P3", path_graph(4), 3, path_graph(3)),
        ("D4(P5)~P3", path_graph(5), 4, path_graph(3)),
        ("D2(K2)~P1", path_graph(2), 2, path_graph(1)),
    ]
    for n in range(2, max_complete + 1):
        cases.append((f"D{n}(K{n})~Q{n}-N[v]", complete_graph(n), n,
                      remove_closed_nbhd(hypercube(n), 0)))
    return cases


def verify_named_isomorphisms(max_complete: int = 8) -> list[VerdictRecord]:
    return [VerdictRecord("named_isomorphism", name, True, is_isomorphic(build(g, k).as_graph(), h))
            for name, g, k, h in named_isomorphism_cases(max_complete)]


# --- realizability census -------------------------------------------------------------

@dataclass
class Census:
    max_n: int
    entries: list[dict] = field(default_factory=list)

    @property
    def cycles(self) -> list[int]:
        return sorted({e["m"] for e in self.entries if e["family"] == "cycle"})

    @property
    def paths(self) -> list[int]:
        return sorted({e["m"] for e in self.entries if e["family"] == "path"})

    def to_json(self) -> dict:
        return {"max_n": self.max_n, "realizable_cycles": self.cycles,
                "realizable_paths": self.paths, "entries": self.entries}


def _census_graph(g: Graph) -> list[dict]:
    prof = domination_profile(g)
    out = []
    for k in range(prof.gamma_t, g.n + 1):
        h = build(g, k).as_graph()
        for family in ("cycle", "path"):
            hit = matches_family(h, family)
            if hit is not None:
                out.append({"graph": describe(g), "k": k, "family": family, "m": hit["m"]})
    return out


def survey_small_graphs(max_n: int = 6, jobs: int = 1) -> Census:
    """Classify D_k^t(G) for every graph G of order at most ``max_n`` without
    isolated vertices or K_2 components and every gamma_t <= k <= n."""
    if max_n < 3:
        raise BadParameter("census needs max_n >= 3")
    census = Census(max_n)
    for rows in _map(_census_graph, graphs_without_small_components(max_n), jobs):
        census.entries.extend(rows)
    return census


def verify_census(max_n: int = 6, jobs: int = 1) -> tuple[Census, list[VerdictRecord]]:
    census = survey_small_graphs(max_n, jobs)
    inst = f"order<={max_n}"
    return census, [
        VerdictRecord("realizable_cycles", inst, [4, 6, 8, 10], census.cycles),
        VerdictRecord("realizable_paths", inst, [1, 3], census.paths),
    ]


# --- gap hunting -------------------------------------------------------------------------

@dataclass(frozen=True)
class GapHit:
    name: str
    graph: Graph
    d0: int
    Gamma_t: int

    def to_json(self) -> dict:
        return {"name": self.name, "graph": describe(self.graph),
                "d0": self.d0, "Gamma_t": self.Gamma_t, "gap": self.d0 - self.Gamma_t}


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n < 2:
        raise BadParameter("trees need at least two vertices")
    if n == 2:
        return path_graph(2)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def family_stream(kind: str, lo: int, hi: int, count: int = 50, seed: int = 0) -> Iterator[tuple[str, Graph]]:
    """Named graphs for :func:`hunt_d0_gap`: ``cycles``, ``paths``,
    ``trees`` (``count`` random trees per order) or ``connected``."""
    if kind == "cycles":
        yield from ((f"C{n}", cycle_graph(n)) for n in range(max(lo, 3), hi + 1))
    elif kind == "paths":
        yield from ((f"P{n}", path_graph(n)) for n in range(max(lo, 2), hi + 1))
    elif kind == "trees":
        rng = random.Random(seed)
        for n in range(max(lo, 2), hi + 1):
            for i in range(count):
                yield f"tree{n}#{i}", random_tree(n, rng)
    elif kind == "connected":
        for g in connected_corpus(max(lo, 2), hi):
            yield describe(g), g
    else:
        raise BadParameter(f"unknown stream {kind!r}")


def hunt_d0_gap(stream: Iterable[tuple[str, Graph]], alpha: int) -> list[GapHit]:
    """Graphs whose d0 exceeds Gamma_t by at least ``alpha``."""
    hits = []
    for name, g in stream:
        gap_d0 = d0(g)
        big = domination_profile(g).Gamma_t
        if gap_d0 - big >= alpha:
            hits.append(GapHit(name, g, gap_d0, big))
    return hits


# --- suites -------------------------------------------------------------------------------

def suite_cycles(max_n: int = 16, jobs: int = 1) -> list[VerdictRecord]:
    ns = list(range(3, max_n + 1))
    out = _map(verify_cycle_d0, ns, jobs)
    out += _map(_closed_cycle, ns, jobs)
    for lemma in _map(verify_cycle_lemmas, [n for n in ns if n % 4 == 0 and n >= 8], jobs):
        out.extend(lemma)
    return out


def _closed_cycle(n: int) -> VerdictRecord:
    return verify_closed_forms("cycle", n)


def _closed_path(n: int) -> VerdictRecord:
    return verify_closed_forms("path", n)


def suite_paths(max_n: int = 16, jobs: int = 1) -> list[VerdictRecord]:
    ns = list(range(2, max_n + 1))
    return _map(verify_path_d0, ns, jobs) + _map(_closed_path, ns, jobs)


def _stem_only(g: Graph) -> VerdictRecord:
    return verify_stem_theorem(g)


def suite_stems(max_n: int = 8, jobs: int = 1) -> list[VerdictRecord]:
    return _map(_stem_only, connected_corpus(3, max_n), jobs)


def _bounds_only(g: Graph) -> list[VerdictRecord]:
    return verify_bounds(g)


def suite_bounds(max_n: int = 8, jobs: int = 1) -> list[VerdictRecord]:
    return [r for rows in _map(_bounds_only, connected_corpus(3, max_n), jobs) for r in rows]


CORONA_BASES = {
    "K2": (path_graph(2), [[1, 1], [2, 1], [2, 2], [3, 2], [3, 3], [4, 2]]),
    "P3": (path_graph(3), [[1, 1, 1], [2, 1, 1], [1, 2, 1], [2, 1, 2], [2, 2, 2]]),
    "C4": (cycle_graph(4), [[1, 1, 1, 1], [2, 1, 1, 1], [2, 2, 1, 1], [2, 1, 2, 1]]),
}


def corona_cases(max_n: int = 6) -> list[tuple[Graph, list[int], int]]:
    cases = []
    for base, count_list in CORONA_BASES.values():
        for counts in count_list:
            n = sum(counts)
            if n <= max_n:
                cases.extend((base, counts, top) for top in range(n + 1))
    return cases


def _corona_case(case) -> VerdictRecord:
    return verify_corona_hypercube(*case)


def suite_corona(max_n: int = 6, jobs: int = 1) -> list[VerdictRecord]:
    return _map(_corona_case, corona_cases(max_n), jobs)


def suite_named(max_n: int = 8, jobs: int = 1) -> list[VerdictRecord]:
    return verify_named_isomorphisms(max_n)


def suite_census(max_n: int = 6, jobs: int = 1) -> list[VerdictRecord]:
    return verify_census(max_n, jobs)[1]


def spider_fixture() -> list[VerdictRecord]:
    """The spider with three legs of length two: unique minimum TDS, a unique
    maximum minimal TDS of size n - 1 that is isolated in D_6^t."""
    g = spider((2, 2, 2))
    prof = domination_profile(g)
    comps = connectivity_profile(g)
    (big,) = prof.Gamma_t_sets
    labels = component_labels(g, 6)
    big_alone = sum(1 for s, c in labels.items() if c == labels[big]) == 1
    stem_set = stems(g)
    return [
        VerdictRecord("spider_gamma_t", "S222", 4, prof.gamma_t),
        VerdictRecord("spider_unique_gamma_set", "S222", [set_label(stem_set | 1)],
                      [set_label(s) for s in prof.gamma_t_sets]),
        VerdictRecord("spider_D4_is_K1", "S222", True,
                      is_isomorphic(build(g, 4).as_graph(), path_graph(1))),
        VerdictRecord("spider_Gamma_t", "S222", 6, prof.Gamma_t),
        VerdictRecord("spider_Gamma_set_isolated_in_D6", "S222", True, big_alone),
        VerdictRecord("spider_D6_disconnected", "S222", True, comps[6] > 1),
        VerdictRecord("spider_stems_independent_not_tds", "S222", [3, False],
                      [stem_set.bit_count(), is_tds(g, stem_set)]),
    ]


SUITES: dict[str, tuple[Callable, int]] = {
    "cycles": (suite_cycles, 16),
    "paths": (suite_paths, 16),
    "stems": (suite_stems, 8),
    "bounds": (suite_bounds, 8),
    "corona": (suite_corona, 6),
    "census": (suite_census, 6),
    "named": (suite_named, 8),
}


def run_suite(name: str, max_n: int | None = None, jobs: int = 1) -> list[VerdictRecord]:
    try:
        fn, default = SUITES[name]
    except KeyError:
        raise BadParameter(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(default if max_n is None else max_n, jobs)

