"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v``
belongs to the set.  Graphs handed to the domination and reconfiguration
routines must have order at most :data:`MAX_ORDER`; the :class:`Graph` type
itself accepts larger orders so that explicit reconfiguration graphs and
hypercubes can be compared and rendered with the same machinery.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    MalformedLine,
    NotConnected,
    OrderTooLarge,
    SelfLoop,
    VertexOutOfRange,
)

MAX_ORDER = 30


# --- vertex sets -----------------------------------------------------------

def bit(v: int) -> int:
    return 1 << v


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_vertices(mask: int) -> list[int]:
    return list(iter_bits(mask))


def from_vertices(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


def set_label(mask: int) -> str:
    """Render a vertex set as ``{0,1,4}``."""
    return "{" + ",".join(str(v) for v in iter_bits(mask)) + "}"


def parse_vertex_list(text: str) -> int:
    """Parse a comma separated vertex list such as ``"0,1,4"`` into a mask."""
    text = text.strip().strip("{}")
    if not text:
        return 0
    try:
        return from_vertices(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise MalformedLine(f"bad vertex list {text!r}") from exc


# --- graphs ----------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_neighbor_lists(cls, nbrs: Sequence[Iterable[int]]) -> Graph:
        return cls(len(nbrs), tuple(from_vertices(row) for row in nbrs))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(row)) for row in self.adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.neighbors[u] if u < v)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adj)

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def distance(self, u: int, v: int) -> int | None:
        """Length of a shortest u-v path, or ``None`` if unreachable."""
        reached = frontier = 1 << u
        d = 0
        while frontier:
            if reached >> v & 1:
                return d
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= self.adj[w]
            frontier = nxt & ~reached
            reached |= frontier
            d += 1
        return None

    def induced(self, mask: int) -> Graph:
        """Subgraph induced by ``mask``, relabelled 0.. in increasing order."""
        keep = to_vertices(mask)
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_neighbor_lists(
            [[index[u] for u in self.neighbors[v] if mask >> u & 1] for v in keep]
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which vertex ``v`` is renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in self.neighbors[v]:
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def require_connected(self) -> None:
        if not self.is_connected():
            raise NotConnected("graph is not connected")

    def require_small(self) -> None:
        if self.n > MAX_ORDER:
            raise OrderTooLarge(f"order {self.n} exceeds {MAX_ORDER}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


# --- text formats ------------------------------------------------------------

_HEADER = re.compile(r"^n\s+(\d+)$")
_EDGE = re.compile(r"^(-?\d+)\s+(-?\d+)$")


def from_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` / ``u v`` edge-list format.

    Blank lines and ``#`` comments are skipped and duplicate edges ignored.
    Every offending line is collected; the raised exception is of the kind of
    the first problem and its ``problems`` attribute lists all of them.
    """
    n = None
    edges = []
    problems: list[tuple[int, str, type]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                problems.append((lineno, f"expected header 'n <count>', got {raw!r}", MalformedLine))
                break
            n = int(m.group(1))
            if n > MAX_ORDER:
                raise OrderTooLarge(f"line {lineno}: order {n} exceeds {MAX_ORDER}")
            continue
        m = _EDGE.match(line)
        if not m:
            problems.append((lineno, f"malformed edge line {raw!r}", MalformedLine))
            continue
        u, v = int(m.group(1)), int(m.group(2))
        if not (0 <= u < n and 0 <= v < n):
            problems.append((lineno, f"vertex out of range 0..{n - 1} in {raw!r}", VertexOutOfRange))
        elif u == v:
            problems.append((lineno, f"self-loop at vertex {u}", SelfLoop))
        else:
            edges.append((u, v))
    if n is None and not problems:
        problems.append((0, "missing header 'n <count>'", MalformedLine))
    if problems:
        kind = problems[0][2]
        listing = "; ".join(f"line {ln}: {msg}" for ln, msg, _ in problems)
        raise kind(listing, [(ln, msg) for ln, msg, _ in problems])
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    edges = [(int(u), int(v)) for u, v in data["edges"]]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {u}-{v} outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    """Render ``g`` in DOT. Output depends only on ``g`` and ``labels``."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            escaped = labels[v].replace("\\", "\\\\").replace('"', '\\"')
            out.append(f'  {v} [label="{escaped}"];')
        else:
            out.append(f"  {v};")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
