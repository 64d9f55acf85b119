"""Generators for the graph families used throughout the package.

Vertex numbering is part of the public contract:

* ``Path(n)`` / ``Cycle(n)``: ``0, 1, ..., n-1`` along the walk.
* ``Star(m)``: centre ``0``, leaves ``1..m``.
* ``DoubleStar(r, t)``: centres ``0`` and ``1``; leaves of ``0`` are
  ``2..r+1``, leaves of ``1`` are ``r+2..r+t+1``.
* ``Spider(l1, l2, ...)``: centre ``0``; each leg is numbered outward from the
  centre, legs consecutively.
* ``GeneralizedCorona(base, counts)``: base vertices first, then the leaves
  grouped by base vertex.
* ``Hypercube(d)``: vertex ``x`` is the subset with bitmask ``x``.
* ``DisjointUnion(parts)``: parts relabelled consecutively in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BadParameter
from .graph import Graph, disjoint_union


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()
    base: "FamilySpec | Graph | None" = None
    parts: tuple = ()

    def __str__(self) -> str:
        if self.kind == "union":
            return "+".join(str(p) for p in self.parts)
        if self.kind == "corona":
            base = self.base if isinstance(self.base, FamilySpec) else "graph"
            return f"corona:{base}@{','.join(map(str, self.params))}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def Path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def Cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def Star(m: int) -> FamilySpec:
    return FamilySpec("star", (m,))


def Complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def DoubleStar(r: int, t: int) -> FamilySpec:
    return FamilySpec("doublestar", (r, t))


def Spider(*legs: int) -> FamilySpec:
    return FamilySpec("spider", tuple(legs))


def GeneralizedCorona(base, leaf_counts=None) -> FamilySpec:
    return FamilySpec("corona", tuple(leaf_counts) if leaf_counts is not None else (), base=base)


def Hypercube(d: int) -> FamilySpec:
    return FamilySpec("hypercube", (d,))


def DisjointUnion(*parts) -> FamilySpec:
    return FamilySpec("union", parts=tuple(parts))


def _as_graph(obj) -> Graph:
    return obj if isinstance(obj, Graph) else generate(obj)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(m: int) -> Graph:
    if m < 1:
        raise BadParameter(f"star needs at least one leaf, got {m}")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def double_star(r: int, t: int) -> Graph:
    if r < 1 or t < 1:
        raise BadParameter(f"double star needs r, t >= 1, got {r}, {t}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(r)]
    edges += [(1, 2 + r + i) for i in range(t)]
    return Graph.from_edges(2 + r + t, edges)


def spider(legs) -> Graph:
    if not legs or any(length < 1 for length in legs):
        raise BadParameter(f"spider needs positive leg lengths, got {legs}")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def generalized_corona(base: Graph, leaf_counts=None) -> Graph:
    r = base.n
    counts = list(leaf_counts) if leaf_counts else [1] * r
    if len(counts) != r:
        raise BadParameter(f"need {r} leaf counts, got {len(counts)}")
    if any(c < 1 for c in counts):
        raise BadParameter("every base vertex needs at least one leaf")
    if base.has_isolated_vertex():
        raise BadParameter("corona base must not have isolated vertices")
    edges = list(base.edges)
    nxt = r
    for v, c in enumerate(counts):
        for _ in range(c):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def hypercube(d: int) -> Graph:
    if d < 0:
        raise BadParameter(f"hypercube dimension must be >= 0, got {d}")
    size = 1 << d
    return Graph(size, tuple(sum(1 << (x ^ (1 << i)) for i in range(d)) for x in range(size)))


def hypercube_levels(d: int, top: int) -> Graph:
    """Subgraph of Q_d induced by the subsets of size at most ``top``.

    Vertices are numbered by (size, bitmask), matching the order in which
    reconfiguration graphs list their sets.
    """
    if not 0 <= top <= d:
        raise BadParameter(f"need 0 <= top <= d, got top={top}, d={d}")
    masks = sorted((m for m in range(1 << d) if m.bit_count() <= top),
                   key=lambda m: (m.bit_count(), m))
    index = {m: i for i, m in enumerate(masks)}
    edges = []
    for m in masks:
        for i in range(d):
            other = m | (1 << i)
            if other != m and other in index:
                edges.append((index[m], index[other]))
    return Graph.from_edges(len(masks), edges)


def levels_order(d: int, top: int) -> int:
    return sum(comb(d, i) for i in range(top + 1))


def remove_closed_nbhd(g: Graph, v: int) -> Graph:
    """``g - N[v]``, relabelled in increasing order."""
    return g.induced(g.vertex_mask & ~g.closed_nbhd(v))


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    try:
        if kind == "path":
            return path_graph(*p)
        if kind == "cycle":
            return cycle_graph(*p)
        if kind == "star":
            return star_graph(*p)
        if kind == "complete":
            return complete_graph(*p)
        if kind == "doublestar":
            return double_star(*p)
        if kind == "spider":
            return spider(p)
        if kind == "hypercube":
            return hypercube(*p)
    except TypeError as exc:
        raise BadParameter(f"wrong number of parameters for {kind}: {p}") from exc
    if kind == "corona":
        if spec.base is None:
            raise BadParameter("corona needs a base graph")
        return generalized_corona(_as_graph(spec.base), p or None)
    if kind == "union":
        if not spec.parts:
            raise BadParameter("disjoint union of nothing")
        return disjoint_union(_as_graph(part) for part in spec.parts)
    raise BadParameter(f"unknown family kind {kind!r}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise BadParameter(f"bad integer list {text!r}") from exc


def parse_family(text: str) -> FamilySpec:
    """Parse the command-line shorthand for a family.

    Examples: ``cycle:8``, ``doublestar:2,3``, ``spider:2,2,2``,
    ``corona:cycle:4`` (one leaf per base vertex), ``corona:path:3@2,1,2``,
    and ``cycle:3+path:3`` for a disjoint union.
    """
    text = text.strip()
    if "+" in text:
        return DisjointUnion(*(parse_family(part) for part in text.split("+")))
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "corona":
        base_text, _, counts = rest.partition("@")
        if not base_text:
            raise BadParameter("corona needs a base family, e.g. corona:cycle:4")
        return GeneralizedCorona(parse_family(base_text), _ints(counts) if counts else None)
    if kind not in {"path", "cycle", "star", "complete", "doublestar", "spider", "hypercube"}:
        raise BadParameter(f"unknown family kind {kind!r}")
    params = _ints(rest)
    if not params:
        raise BadParameter(f"family {kind!r} needs parameters")
    return FamilySpec(kind, params)


def family_order(spec: FamilySpec) -> int:
    """Order predicted from the parameters alone."""
    kind, p = spec.kind, spec.params
    if kind in ("path", "cycle", "complete"):
        return p[0]
    if kind == "star":
        return p[0] + 1
    if kind == "doublestar":
        return 2 + p[0] + p[1]
    if kind == "spider":
        return 1 + sum(p)
    if kind == "hypercube":
        return 1 << p[0]
    if kind == "corona":
        base = _as_graph(spec.base)
        return base.n + (sum(p) if p else base.n)
    if kind == "union":
        return sum(family_order(q) if isinstance(q, FamilySpec) else q.n for q in spec.parts)
    raise BadParameter(f"unknown family kind {kind!r}")
