"""Exhaustive generation of small graphs up to isomorphism.

Every connected graph of order n has a vertex whose removal leaves it
connected (a leaf of any spanning tree), so the connected graphs of order n
are found by joining a new vertex to each nonempty subset of each connected
graph of order n - 1 and discarding isomorphic duplicates by canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .graph import Graph, disjoint_union
from .iso import canonical_labeling

# Connected graphs on n = 1..10 vertices (OEIS A001349).
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs of order ``n`` up to isomorphism, in canonical form,
    sorted by canonical code."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[int, Graph] = {}
    for h in connected_graphs(n - 1):
        for mask in range(1, 1 << (n - 1)):
            adj = list(h.adj)
            for v in range(n - 1):
                if mask >> v & 1:
                    adj[v] |= 1 << (n - 1)
            adj.append(mask)
            g = Graph(n, tuple(adj))
            code, perm = canonical_labeling(g)
            if code not in seen:
                seen[code] = g.relabel(perm)
    return tuple(seen[c] for c in sorted(seen))


def connected_corpus(lo: int, hi: int) -> list[Graph]:
    """Connected graphs with ``lo <= n <= hi``, ordered by order then code."""
    return [g for n in range(lo, hi + 1) for g in connected_graphs(n)]


def graphs_without_small_components(max_n: int, min_component: int = 3) -> list[Graph]:
    """Graphs of order at most ``max_n`` whose components all have at least
    ``min_component`` vertices, up to isomorphism.

    Disconnected members are multisets of connected graphs; listing each
    multiset once (components sorted by order and code) avoids duplicates.
    """
    pool = [(n, i, g) for n in range(min_component, max_n + 1)
            for i, g in enumerate(connected_graphs(n))]
    out = []
    for parts in range(1, max_n // min_component + 1):
        for combo in combinations_with_replacement(pool, parts):
            if sum(n for n, _, _ in combo) <= max_n:
                out.append(disjoint_union(g for _, _, g in combo))
    out.sort(key=lambda g: (g.n, len(g.components())))
    return out
