"""Small-scale graph isomorphism, canonical forms and family recognition.

Both the isomorphism test and the canonical labelling use colour refinement
(1-dimensional Weisfeiler-Leman) followed by individualisation and
backtracking.  Colours are derived from sorted signatures, so the refined
partition is an isomorphism invariant and two graphs can be refined jointly
as one disjoint union.
"""

from __future__ import annotations

from collections import Counter
from math import comb

from .errors import TooLarge
from .families import hypercube, hypercube_levels
from .graph import Graph

DEFAULT_NODE_BUDGET = 200_000


def refine(nbrs, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``, with canonical colour ids."""
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in row]))) for v, row in enumerate(nbrs)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [table[s] for s in sigs]
        if len(table) == ncolors:
            return colors
        ncolors = len(table)


def _individualize(colors: list[int], *vertices: int) -> list[int]:
    target = colors[vertices[0]]
    out = [2 * c + 1 for c in colors]
    for v in vertices:
        out[v] = 2 * target
    return out


def is_isomorphic(g: Graph, h: Graph, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return find_isomorphism(g, h, budget) is not None


def find_isomorphism(g: Graph, h: Graph, budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """A list ``m`` with ``m[v]`` the image of ``v`` in ``h``, or ``None``.

    Raises :class:`TooLarge` once more than ``budget`` search nodes have been
    expanded without a decision.
    """
    n = g.n
    if n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    if n == 0:
        return []
    nbrs = list(g.neighbors) + [tuple(u + n for u in row) for row in h.neighbors]
    nodes = 0

    def balanced(colors):
        return Counter(colors[:n]) == Counter(colors[n:])

    def search(colors):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise TooLarge(f"isomorphism search exceeded {budget} nodes")
        colors = refine(nbrs, colors)
        if not balanced(colors):
            return None
        sizes = Counter(colors[:n])
        if len(sizes) == n:
            where = {c: i for i, c in enumerate(colors[n:])}
            mapping = [where[c] for c in colors[:n]]
            for v in range(n):
                image = 0
                for u in g.neighbors[v]:
                    image |= 1 << mapping[u]
                if image != h.adj[mapping[v]]:
                    return None
            return mapping
        cell = min((size, c) for c, size in sizes.items() if size > 1)[1]
        v = colors.index(cell)
        for w in range(n, 2 * n):
            if colors[w] == cell:
                found = search(_individualize(colors, v, w))
                if found is not None:
                    return found
        return None

    return search([0] * (2 * n))


def _twins(g: Graph, u: int, w: int) -> bool:
    return g.adj[u] & ~(1 << w) == g.adj[w] & ~(1 << u)


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, perm)`` where relabelling by ``perm`` gives the canonical graph.

    ``code`` packs the canonical adjacency rows into one integer; two graphs
    are isomorphic iff their orders and codes agree.  Branches over vertices
    that are twins (identical neighbourhoods up to each other) are pruned,
    since swapping twins is an automorphism.
    """
    n = g.n
    nbrs = g.neighbors
    best: list = [None, None]

    def leaf(perm):
        code = 0
        for v in range(n):
            row = 0
            for u in nbrs[v]:
                row |= 1 << perm[u]
            code |= row << (perm[v] * n)
        if best[0] is None or code > best[0]:
            best[0], best[1] = code, list(perm)

    def search(colors):
        colors = refine(nbrs, colors)
        sizes = Counter(colors)
        if len(sizes) == n:
            leaf(colors)
            return
        cell = min(c for c, size in sizes.items() if size > 1)
        tried: list[int] = []
        for v in range(n):
            if colors[v] != cell or any(_twins(g, v, t) for t in tried):
                continue
            tried.append(v)
            search(_individualize(colors, v))

    if n == 0:
        return 0, []
    search([0] * n)
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, int]:
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


# --- family recognition --------------------------------------------------------

FAMILY_KINDS = ("cycle", "path", "star", "hypercube", "full_subgraph_of_Qn")


def _is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and g.is_connected()


def matches_family(g: Graph, kind: str) -> dict | None:
    """Recognise ``g`` as a member of ``kind`` and return its parameters.

    ``cycle`` -> ``{"m": ...}`` (C_m), ``path`` -> ``{"m": ...}`` (P_m on m
    vertices), ``star`` -> ``{"m": ...}`` (K_{1,m}), ``hypercube`` ->
    ``{"n": ...}`` and ``full_subgraph_of_Qn`` -> ``{"n": ..., "l": ...}`` for
    the levels 0..l of Q_n.  Returns ``None`` on no match.
    """
    if kind == "cycle":
        if g.n >= 3 and all(d == 2 for d in g.degrees) and g.is_connected():
            return {"m": g.n}
        return None
    if kind == "path":
        if _is_tree(g) and g.max_degree() <= 2:
            return {"m": g.n}
        return None
    if kind == "star":
        if g.n >= 2 and _is_tree(g) and g.max_degree() == g.n - 1:
            return {"m": g.n - 1}
        return None
    if kind == "hypercube":
        d = g.n.bit_length() - 1
        if g.n != 1 << d or any(x != d for x in g.degrees):
            return None
        return {"n": d} if is_isomorphic(g, hypercube(d)) else None
    if kind == "full_subgraph_of_Qn":
        if g.n == 1:
            return {"n": 0, "l": 0}
        if not g.is_connected():
            return None
        d = g.max_degree()
        total = 0
        for top in range(d + 1):
            total += comb(d, top)
            if total == g.n and top >= 1:
                return {"n": d, "l": top} if is_isomorphic(g, hypercube_levels(d, top)) else None
            if total > g.n:
                return None
        return None
    raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")


def classify(g: Graph) -> dict:
    """Every family in :data:`FAMILY_KINDS` that ``g`` belongs to."""
    out = {}
    for kind in FAMILY_KINDS:
        params = matches_family(g, kind)
        if params is not None:
            out[kind] = params
    return out

