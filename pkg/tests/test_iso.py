import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import to_nx
from tdsr.errors import TooLarge
from tdsr.families import complete_graph, cycle_graph, hypercube, hypercube_levels, path_graph, star_graph
from tdsr.graph import Graph, disjoint_union
from tdsr.iso import (
    canonical_form,
    canonical_labeling,
    classify,
    find_isomorphism,
    is_isomorphic,
    matches_family,
)
from tdsr.smallgraphs import CONNECTED_COUNTS, connected_graphs


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def shuffled(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


@settings(max_examples=150, deadline=None)
@given(graphs(), graphs())
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(0, 10**6))
def test_relabelled_copies_are_isomorphic(g, seed):
    h = shuffled(g, seed)
    perm = find_isomorphism(g, h)
    assert perm is not None
    assert g.relabel(perm) == h
    assert canonical_form(g) == canonical_form(h)


def test_regular_non_isomorphic_pair():
    # C6 and two triangles: same degree sequence, refinement alone cannot split them
    two_triangles = disjoint_union([cycle_graph(3), cycle_graph(3)])
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert canonical_form(cycle_graph(6)) != canonical_form(two_triangles)


def test_hypercube_vs_shuffled_copy():
    q = hypercube(5)
    assert is_isomorphic(q, shuffled(q, 7))


def test_budget_exhaustion_raises():
    with pytest.raises(TooLarge):
        find_isomorphism(hypercube(6), shuffled(hypercube(6), 3), budget=1)


def test_canonical_labeling_is_permutation():
    g = path_graph(5)
    code, perm = canonical_labeling(g)
    assert sorted(perm) == list(range(5))
    assert isinstance(code, int)


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts_against_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
    ours = connected_graphs(n)
    assert len(ours) == len(atlas) == CONNECTED_COUNTS[n - 1]
    assert len({canonical_form(g) for g in ours}) == len(ours)


def test_connected_graphs_are_connected():
    assert all(g.is_connected() for g in connected_graphs(6))


@pytest.mark.parametrize("g,kind,params", [
    (cycle_graph(7), "cycle", {"m": 7}),
    (path_graph(1), "path", {"m": 1}),
    (path_graph(6), "path", {"m": 6}),
    (star_graph(4), "star", {"m": 4}),
    (path_graph(2), "star", {"m": 1}),
    (hypercube(4), "hypercube", {"n": 4}),
    (hypercube_levels(5, 2), "full_subgraph_of_Qn", {"n": 5, "l": 2}),
    (star_graph(6), "full_subgraph_of_Qn", {"n": 6, "l": 1}),
    (hypercube(3), "full_subgraph_of_Qn", {"n": 3, "l": 3}),
    (Graph(1, (0,)), "full_subgraph_of_Qn", {"n": 0, "l": 0}),
])
def test_matches_family_recovers_parameters(g, kind, params):
    assert matches_family(shuffled(g, 1), kind) == params


@pytest.mark.parametrize("g,kind", [
    (path_graph(5), "cycle"),
    (disjoint_union([cycle_graph(3), cycle_graph(3)]), "cycle"),
    (star_graph(3), "path"),
    (cycle_graph(4), "star"),
    (cycle_graph(8), "hypercube"),
    (complete_graph(4), "full_subgraph_of_Qn"),
])
def test_matches_family_rejects(g, kind):
    assert matches_family(g, kind) is None


def test_unknown_kind():
    with pytest.raises(ValueError):
        matches_family(cycle_graph(4), "wheel")


def test_classify_c4():
    c = classify(cycle_graph(4))
    assert c["cycle"] == {"m": 4}
    assert c["hypercube"] == {"n": 2}
