"""Brute-force reference implementations used only by the tests.

Everything here works on networkx graphs and Python sets, straight from the
definitions, and shares no code with the bitmask implementation under test.
"""

from itertools import chain, combinations

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def subsets(vertices, max_size=None):
    vertices = list(vertices)
    top = len(vertices) if max_size is None else max_size
    return chain.from_iterable(combinations(vertices, r) for r in range(top + 1))


def is_tds(h, s):
    s = set(s)
    return all(any(u in s for u in h[v]) for v in h)


def all_tds(h, max_size=None):
    return [frozenset(s) for s in subsets(h.nodes, max_size) if is_tds(h, s)]


def is_minimal_tds(h, s):
    """No proper subset at all (not just one-vertex deletions) is a TDS."""
    s = set(s)
    if not is_tds(h, s):
        return False
    return not any(is_tds(h, t) for t in subsets(s) if len(t) < len(s))


def all_mtds(h):
    return [s for s in all_tds(h) if is_minimal_tds(h, s)]


def private_parts(h, s, v):
    s = set(s)
    others = set()
    for u in s - {v}:
        others |= set(h[u])
    opn = set(h[v]) - others
    return opn, opn & s, opn - s


def dk_graph(h, k):
    """D_k^t as a networkx graph on frozensets, built from pairwise comparison."""
    sets = all_tds(h, k)
    d = nx.Graph()
    d.add_nodes_from(sets)
    for a, b in combinations(sets, 2):
        if len(a ^ b) == 1:
            d.add_edge(a, b)
    return d


def d0(h):
    n = h.number_of_nodes()
    ell = n
    for k in range(n, -1, -1):
        d = dk_graph(h, k)
        if d.number_of_nodes() and nx.is_connected(d):
            ell = k
        else:
            break
    return ell


def mask(vertices):
    return sum(1 << v for v in vertices)
