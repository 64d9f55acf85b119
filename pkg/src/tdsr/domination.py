"""Total domination: predicates, private neighbourhoods, exact invariants.

All sets are integer bitmasks over the vertices of a :class:`~tdsr.graph.Graph`.
Exhaustive routines evaluate the whole subset lattice at once with numpy when
``2**n`` fits in memory, and fall back to layer-by-layer combination
enumeration above :data:`TABLE_MAX_ORDER`.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import (
    BadParameter,
    CapExceeded,
    IsolatedVertex,
    NotATds,
    VertexNotInSet,
)
from .graph import Graph, iter_bits, to_vertices

log = logging.getLogger(__name__)

TABLE_MAX_ORDER = 22
DEFAULT_CAP = 1 << 22


def require_no_isolated(g: Graph) -> None:
    g.require_small()
    for v, row in enumerate(g.adj):
        if not row:
            raise IsolatedVertex(f"vertex {v} is isolated; total domination is undefined")


def is_tds(g: Graph, s: int) -> bool:
    """True iff every vertex of ``g`` has a neighbour in ``s``."""
    require_no_isolated(g)
    return all(row & s for row in g.adj)


def _tds_unchecked(adj, s: int) -> bool:
    for row in adj:
        if not row & s:
            return False
    return True


# --- private neighbourhoods ---------------------------------------------------------

@dataclass(frozen=True)
class PrivateNbhd:
    opn: int
    ipn: int
    epn: int


def private_neighbors(g: Graph, s: int, v: int) -> PrivateNbhd:
    """Open private neighbourhood of ``v`` relative to ``s``, split into the
    internal part (inside ``s``) and the external part (outside ``s``)."""
    if not s >> v & 1:
        raise VertexNotInSet(f"vertex {v} is not in the set")
    others = 0
    for u in iter_bits(s & ~(1 << v)):
        others |= g.adj[u]
    opn = g.adj[v] & ~others
    return PrivateNbhd(opn=opn, ipn=opn & s, epn=opn & ~s)


def _check_tds(g: Graph, s: int) -> None:
    if s & ~g.vertex_mask:
        raise BadParameter("set contains vertices outside the graph")
    if not is_tds(g, s):
        raise NotATds("set is not a total dominating set")


def is_mtds(g: Graph, s: int) -> bool:
    """Minimality via open private neighbours: every member of ``s`` must
    have one.  Vertices dominated exactly once are tracked in one pass."""
    _check_tds(g, s)
    once = twice = 0
    for u in iter_bits(s):
        row = g.adj[u]
        twice |= once & row
        once = (once | row) & ~twice
    return all(g.adj[u] & once for u in iter_bits(s))


def is_mtds_epn(g: Graph, s: int) -> bool:
    """Minimality via external private neighbours.

    Let H be the union of the components of G[s] with at least three vertices
    and X the stems of H.  Then ``s`` is minimal iff every vertex of H outside
    X has an external private neighbour.
    """
    _check_tds(g, s)
    sub = g.induced(s)
    members = to_vertices(s)
    for comp in sub.components():
        if comp.bit_count() < 3:
            continue
        local = [i for i in iter_bits(comp)]
        stems_h = set()
        for i in local:
            if sub.degrees[i] == 1:
                stems_h.update(sub.neighbors[i])
        for i in local:
            if i in stems_h:
                continue
            v = members[i]
            private = set(g.neighbors[v]) - set(members)
            for other in members:
                if other != v:
                    private -= set(g.neighbors[other])
            if not private:
                return False
    return True


def is_mtds_naive(g: Graph, s: int) -> bool:
    """Minimality by brute force: no set obtained by deleting one vertex is a TDS.

    Deleting one vertex suffices because supersets of a TDS are TDSs.
    """
    _check_tds(g, s)
    return not any(_tds_unchecked(g.adj, s & ~(1 << v)) for v in iter_bits(s))


# --- exhaustive tables ----------------------------------------------------------------

@lru_cache(maxsize=16)
def _tables(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(popcount, is_tds, is_mtds)`` indexed by bitmask, for ``n <= TABLE_MAX_ORDER``."""
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int8)
    tds = np.ones(1 << n, dtype=bool)
    for v, row in enumerate(g.adj):
        pop += ((masks >> v) & 1).astype(np.int8)
        tds &= (masks & row) != 0
    mtds = tds.copy()
    for v in range(n):
        has = ((masks >> v) & 1).astype(bool)
        mtds &= ~(has & tds[masks ^ (1 << v)])
    for arr in (pop, tds, mtds):
        arr.flags.writeable = False
    return pop, tds, mtds


def _use_table(g: Graph) -> bool:
    return g.n <= TABLE_MAX_ORDER


def _sorted_masks(selected: np.ndarray, pop: np.ndarray) -> np.ndarray:
    idx = np.flatnonzero(selected)
    return idx[np.argsort(pop[idx], kind="stable")]


def tds_masks(g: Graph, k: int | None = None, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All TDSs of size at most ``k`` as an int64 array in (size, mask) order."""
    require_no_isolated(g)
    k = g.n if k is None else k
    if _use_table(g):
        pop, tds, _ = _tables(g)
        out = _sorted_masks(tds & (pop <= k), pop)
        if len(out) > cap:
            raise CapExceeded(f"{len(out)} total dominating sets exceed cap {cap}")
        return out
    return np.fromiter(_enumerate_by_layers(g, k, cap), dtype=np.int64)


def _enumerate_by_layers(g: Graph, k: int, cap: int) -> Iterator[int]:
    forced = stems(g) | _k2_vertices(g)
    free = to_vertices(g.vertex_mask & ~forced)
    base = forced.bit_count()
    emitted = 0
    for size in range(max(base, 2), min(k, g.n) + 1):
        layer = []
        for combo in combinations(free, size - base):
            s = forced
            for v in combo:
                s |= 1 << v
            if _tds_unchecked(g.adj, s):
                layer.append(s)
        emitted += len(layer)
        if emitted > cap:
            raise CapExceeded(f"more than {cap} total dominating sets")
        yield from sorted(layer)


def enumerate_tds(g: Graph, k: int | None = None, cap: int = DEFAULT_CAP) -> Iterator[int]:
    """Every TDS of size at most ``k`` exactly once, ordered by (size, mask)."""
    require_no_isolated(g)
    if k is not None and k > g.n:
        raise BadParameter(f"size cap {k} exceeds order {g.n}")
    if _use_table(g):
        yield from (int(m) for m in tds_masks(g, k, cap))
    else:
        yield from _enumerate_by_layers(g, g.n if k is None else k, cap)


def mtds_masks(g: Graph) -> np.ndarray:
    """All minimal TDSs in (size, mask) order."""
    require_no_isolated(g)
    if _use_table(g):
        pop, _, mtds = _tables(g)
        return _sorted_masks(mtds, pop)
    return np.fromiter((s for s in _enumerate_by_layers(g, g.n, DEFAULT_CAP)
                        if is_mtds_naive(g, s)), dtype=np.int64)


def enumerate_mtds(g: Graph) -> Iterator[int]:
    yield from (int(m) for m in mtds_masks(g))


# --- invariants -----------------------------------------------------------------------

def leaves(g: Graph) -> int:
    return sum(1 << v for v, d in enumerate(g.degrees) if d == 1)


def _k2_vertices(g: Graph) -> int:
    out = 0
    for comp in k2_components(g):
        out |= comp
    return out


def k2_components(g: Graph) -> list[int]:
    """Components isomorphic to K_2.  Their vertices are leaves but, by
    convention, neither is a stem."""
    return [c for c in g.components() if c.bit_count() == 2]


def stems(g: Graph) -> int:
    """Neighbours of leaves, ignoring K_2 components."""
    lv = leaves(g)
    out = 0
    for v in iter_bits(lv):
        out |= g.adj[v]
    return out & ~_k2_vertices(g)


def induced_components(g: Graph, s: int) -> list[int]:
    """Vertex masks (in ``g``'s labels) of the components of G[s]."""
    members = to_vertices(s)
    return [sum(1 << members[i] for i in iter_bits(c)) for c in g.induced(s).components()]


@dataclass(frozen=True)
class DominationProfile:
    gamma_t: int
    Gamma_t: int
    sigma: int
    lambda_: int
    gamma_t_sets: tuple[int, ...] = field(repr=False)
    Gamma_t_sets: tuple[int, ...] = field(repr=False)
    num_mtds: int = 0

    def to_json(self) -> dict:
        return {
            "gamma_t": self.gamma_t,
            "Gamma_t": self.Gamma_t,
            "sigma": self.sigma,
            "lambda": self.lambda_,
            "num_mtds": self.num_mtds,
        }


def domination_profile(g: Graph) -> DominationProfile:
    """Exact gamma_t and Gamma_t together with every extremal set."""
    mins = mtds_masks(g)
    sizes = [int(m).bit_count() for m in mins]
    lo, hi = min(sizes), max(sizes)
    return DominationProfile(
        gamma_t=lo,
        Gamma_t=hi,
        sigma=stems(g).bit_count(),
        lambda_=leaves(g).bit_count(),
        gamma_t_sets=tuple(int(m) for m, z in zip(mins, sizes) if z == lo),
        Gamma_t_sets=tuple(int(m) for m, z in zip(mins, sizes) if z == hi),
        num_mtds=len(mins),
    )


def total_domination_number(g: Graph) -> int:
    """gamma_t by increasing-size search with early exit."""
    require_no_isolated(g)
    for size in range(2, g.n + 1):
        for combo in combinations(range(g.n), size):
            s = sum(1 << v for v in combo)
            if _tds_unchecked(g.adj, s):
                return size
    raise AssertionError("V(G) is always a TDS")


# --- closed forms ---------------------------------------------------------------------

def gamma_t_closed(kind: str, n: int) -> int:
    if kind not in ("path", "cycle"):
        raise BadParameter(f"closed form only for paths and cycles, not {kind!r}")
    if kind == "path" and n == 2:
        return 2
    if n < 3:
        raise BadParameter(f"{kind} of order {n} has no closed form")
    return n // 2 + 1 if n % 4 == 2 else -(-n // 2)


def Gamma_t_closed(kind: str, n: int) -> int:
    if kind == "path":
        if n < 2:
            raise BadParameter(f"path of order {n} has isolated vertices")
        return 2 * ((n + 1) // 3)
    if kind == "cycle":
        if n < 3:
            raise BadParameter(f"cycle needs n >= 3, got {n}")
        return 2 * (n // 3) if n % 6 == 2 else (2 * n) // 3
    raise BadParameter(f"closed form only for paths and cycles, not {kind!r}")


# --- structural recognition -------------------------------------------------------------

def has_Gamma_n_minus_1_structure(g: Graph) -> bool:
    """True iff ``g`` is a matching of (n-1)/2 edges plus one vertex joined to
    at least one end of every matching edge."""
    g.require_connected()
    if g.n < 3:
        raise BadParameter("needs order at least 3")
    if g.n % 2 == 0:
        return False
    for w in range(g.n):
        rest = g.vertex_mask & ~(1 << w)
        if all((g.adj[v] & rest).bit_count() == 1 for v in iter_bits(rest)):
            pairs = {frozenset((v, (g.adj[v] & rest).bit_length() - 1)) for v in iter_bits(rest)}
            if all(g.adj[w] & sum(1 << x for x in p) for p in pairs):
                return True
    return False
