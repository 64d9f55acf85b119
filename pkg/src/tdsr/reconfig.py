"""The k-total dominating graph D_k^t(G) and reconfiguration queries.

D_k^t(G) has a vertex for every TDS of size at most k and an edge between two
sets that differ in exactly one vertex.  Supersets of a TDS are TDSs, so every
edge joins some S to S + v; connectivity is therefore computed without an
explicit edge list, by union-find over these one-vertex extensions processed
layer by layer in order of set size.  One pass yields the component count of
D_k^t(G) for every k simultaneously.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from .domination import (
    DEFAULT_CAP,
    _tds_unchecked,
    domination_profile,
    is_tds,
    require_no_isolated,
    tds_masks,
)
from .errors import BadParameter, NotATds, SizeExceedsK
from .graph import Graph, iter_bits, set_label, to_dot

log = logging.getLogger(__name__)


class UnionFind:
    def __init__(self):
        self.parent: list[int] = []
        self.size: list[int] = []
        self.count = 0

    def add(self) -> int:
        i = len(self.parent)
        self.parent.append(i)
        self.size.append(1)
        self.count += 1
        return i

    def find(self, i: int) -> int:
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        if self.size[ri] < self.size[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        self.size[ri] += self.size[rj]
        self.count -= 1
        return True


class _Index:
    """Mask -> position lookup; a dense array when the lattice is small."""

    def __init__(self, n: int, masks: np.ndarray):
        if n <= 22:
            self._dense = np.full(1 << n, -1, dtype=np.int64)
            self._dense[masks] = np.arange(len(masks))
            self._lookup = self._dense.tolist()
            self.get = self._get_dense
        else:
            self._map = {int(m): i for i, m in enumerate(masks)}
            self.get = self._map.get

    def _get_dense(self, mask: int):
        i = self._lookup[mask]
        return None if i < 0 else i


# --- explicit construction ----------------------------------------------------------

@dataclass(frozen=True)
class ReconGraph:
    k: int
    order: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    below_gamma: bool = False

    def as_graph(self) -> Graph:
        return Graph.from_edges(len(self.vertices), self.edges)

    def labels(self) -> list[str]:
        return [set_label(s) for s in self.vertices]

    def num_components(self) -> int:
        uf = UnionFind()
        for _ in self.vertices:
            uf.add()
        for i, j in self.edges:
            uf.union(i, j)
        return uf.count

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertices": [hex(s) for s in self.vertices],
            "edges": [[i, j] for i, j in self.edges],
            "components": self.num_components(),
        }

    def to_dot(self) -> str:
        return to_dot(self.as_graph(), self.labels(), name=f"D{self.k}")


def _check_k(g: Graph, k: int) -> None:
    if k < 0 or k > g.n:
        raise BadParameter(f"need 0 <= k <= n = {g.n}, got k = {k}")


def build(g: Graph, k: int, cap: int = DEFAULT_CAP) -> ReconGraph:
    """Explicit D_k^t(g): vertices in (size, mask) order, edges sorted."""
    require_no_isolated(g)
    _check_k(g, k)
    masks = tds_masks(g, k, cap)
    if len(masks) == 0:
        log.warning("k = %d is below gamma_t; D_k^t is empty", k)
        return ReconGraph(k, g.n, (), (), below_gamma=True)
    index = _Index(g.n, masks)
    edges = []
    for i, s in enumerate(masks.tolist()):
        if s.bit_count() >= k:
            continue
        free = g.vertex_mask & ~s
        for v in iter_bits(free):
            edges.append((i, index.get(s | (1 << v))))
    edges.sort()
    return ReconGraph(k, g.n, tuple(masks.tolist()), tuple(edges))


# --- implicit connectivity -----------------------------------------------------------------

def connectivity_profile(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """``out[k]`` is the number of components of D_k^t(g) for ``0 <= k <= n``.

    The empty graph (k below gamma_t) is reported as 0 components.
    """
    require_no_isolated(g)
    masks = tds_masks(g, g.n, cap).tolist()
    index = _Index(g.n, np.asarray(masks, dtype=np.int64))
    out = [0] * (g.n + 1)
    uf = UnionFind()
    size = 0
    for j, t in enumerate(masks):
        p = t.bit_count()
        while size < p:
            out[size] = uf.count
            size += 1
        uf.add()
        for v in iter_bits(t):
            i = index.get(t ^ (1 << v))
            if i is not None:
                uf.union(i, j)
    while size <= g.n:
        out[size] = uf.count
        size += 1
    return out


@dataclass(frozen=True)
class ConnectivityReport:
    k: int
    num_vertices: int
    num_components: int
    is_connected: bool
    isolated_gamma_sets: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "num_vertices": self.num_vertices,
            "num_components": self.num_components,
            "is_connected": self.is_connected,
            "isolated_gamma_sets": [hex(s) for s in self.isolated_gamma_sets],
        }


def connectivity(g: Graph, k: int, cap: int = DEFAULT_CAP) -> ConnectivityReport:
    require_no_isolated(g)
    _check_k(g, k)
    masks = tds_masks(g, k, cap).tolist()
    index = _Index(g.n, np.asarray(masks, dtype=np.int64))
    uf = UnionFind()
    for j, t in enumerate(masks):
        uf.add()
        for v in iter_bits(t):
            i = index.get(t ^ (1 << v))
            if i is not None:
                uf.union(i, j)
    profile = domination_profile(g)
    # A Gamma_t-set has no TDS subsets, so it is isolated iff it cannot grow.
    isolated = tuple(s for s in profile.Gamma_t_sets
                     if s.bit_count() == k and s != g.vertex_mask)
    return ConnectivityReport(
        k=k,
        num_vertices=len(masks),
        num_components=uf.count,
        is_connected=uf.count == 1,
        isolated_gamma_sets=isolated,
    )


def component_labels(g: Graph, k: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Map every vertex of D_k^t(g) to the smallest mask in its component."""
    require_no_isolated(g)
    _check_k(g, k)
    masks = tds_masks(g, k, cap).tolist()
    index = _Index(g.n, np.asarray(masks, dtype=np.int64))
    uf = UnionFind()
    for j, t in enumerate(masks):
        uf.add()
        for v in iter_bits(t):
            i = index.get(t ^ (1 << v))
            if i is not None:
                uf.union(i, j)
    smallest: dict[int, int] = {}
    for j, t in enumerate(masks):
        root = uf.find(j)
        if root not in smallest or t < smallest[root]:
            smallest[root] = t
    return {t: smallest[uf.find(j)] for j, t in enumerate(masks)}


def d0(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Least l such that D_k^t(g) is connected for every k >= l.

    Connectivity is checked for every k up to n rather than stopping at the
    first connected k above Gamma_t.
    """
    profile = connectivity_profile(g, cap)
    bad = [k for k, c in enumerate(profile) if c != 1]
    return max(bad) + 1 if bad else 0


# --- witnesses and components -------------------------------------------------------------

@dataclass(frozen=True)
class ReconPath:
    steps: tuple[int, ...]

    @property
    def moves(self) -> int:
        return len(self.steps) - 1

    def to_json(self) -> dict:
        return {"moves": self.moves, "steps": [set_label(s) for s in self.steps]}

    def is_valid(self, g: Graph, k: int) -> bool:
        if any(s.bit_count() > k or not is_tds(g, s) for s in self.steps):
            return False
        return all((a ^ b).bit_count() == 1 for a, b in zip(self.steps, self.steps[1:]))


def _neighbours(g: Graph, s: int, k: int) -> list[int]:
    out = [s ^ (1 << v) for v in iter_bits(s) if _tds_unchecked(g.adj, s ^ (1 << v))]
    if s.bit_count() < k:
        out.extend(s | (1 << v) for v in iter_bits(g.vertex_mask & ~s))
    out.sort()
    return out


def _check_endpoint(g: Graph, s: int, k: int) -> None:
    if s & ~g.vertex_mask:
        raise BadParameter("set contains vertices outside the graph")
    if not is_tds(g, s):
        raise NotATds(f"{set_label(s)} is not a total dominating set")
    if s.bit_count() > k:
        raise SizeExceedsK(f"{set_label(s)} has more than k = {k} vertices")


def reconfigure(g: Graph, s: int, t: int, k: int) -> ReconPath | None:
    """Shortest add/remove sequence of TDSs of size <= k from ``s`` to ``t``.

    Breadth-first search visits neighbours in increasing mask order, so the
    returned witness is deterministic.  ``None`` means ``s`` and ``t`` lie in
    different components of D_k^t(g).
    """
    require_no_isolated(g)
    _check_k(g, k)
    _check_endpoint(g, s, k)
    _check_endpoint(g, t, k)
    parent = {s: s}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        if cur == t:
            steps = [t]
            while steps[-1] != s:
                steps.append(parent[steps[-1]])
            return ReconPath(tuple(reversed(steps)))
        for nxt in _neighbours(g, cur, k):
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    return None


@dataclass(frozen=True)
class ComponentInfo:
    id: int
    size: int

    def to_json(self) -> dict:
        return {"id": hex(self.id), "size": self.size}


def component_of(g: Graph, s: int, k: int) -> ComponentInfo:
    """Component of ``s`` in D_k^t(g), identified by its smallest mask."""
    require_no_isolated(g)
    _check_k(g, k)
    _check_endpoint(g, s, k)
    seen = {s}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbours(g, cur, k):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return ComponentInfo(id=min(seen), size=len(seen))
