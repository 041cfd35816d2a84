"""Simple undirected graphs and the structural queries the recognizer needs.

Adjacency is stored as one bitmask per vertex, which keeps the hot
operations (common neighborhoods, clique tests, claw search) cheap on
the small graphs this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError
from .hypergraph import Hypergraph


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency_masks(cls, masks: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = masks
        return g

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            higher = self._adj[u] >> (u + 1) << (u + 1)
            for v in _bits(higher):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class Claw:
    """Induced star: center adjacent to pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, ...]


def line_graph(hg: Hypergraph) -> Graph:
    """Intersection graph of the hyperedges.

    Vertex i corresponds to edge i of the hypergraph; two vertices are
    adjacent iff the edges share at least one vertex.  Identical repeated
    edges intersect themselves, so their copies are adjacent.
    """
    masks = []
    for e in hg.edges:
        m = 0
        for v in e:
            m |= 1 << v
        masks.append(m)
    count = len(masks)
    adj = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph.from_adjacency_masks(tuple(adj))


def edge_degree(g: Graph, u: int, v: int) -> int:
    """Number of triangles containing the edge uv."""
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    return (g.adjacency_mask(u) & g.adjacency_mask(v)).bit_count()


def min_edge_degree(g: Graph) -> int:
    """Minimum over edges of the triangle count; undefined on edgeless graphs."""
    best = None
    for u, v in g.edges():
        d = (g.adjacency_mask(u) & g.adjacency_mask(v)).bit_count()
        if best is None or d < best:
            best = d
            if best == 0:
                break
    if best is None:
        raise InputError("minimum edge degree is undefined for an edgeless graph")
    return best


def common_neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to every vertex of the given set, excluding the set itself."""
    witness = list(vertices)
    if not witness:
        raise InputError("common neighborhood of an empty set is undefined")
    mask = (1 << g.n) - 1
    own = 0
    for w in witness:
        if not 0 <= w < g.n:
            raise InputError(f"vertex {w} outside [0, {g.n})")
        mask &= g.adjacency_mask(w)
        own |= 1 << w
    return frozenset(_bits(mask & ~own))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each sorted, listed lexicographically.

    Pivoted Bron-Kerbosch on bitmasks; isolated vertices show up as
    singleton cliques.
    """
    adj = g._adj
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        # pivot: vertex of p|x with the most neighbors in p, lowest index on ties
        pivot = -1
        best = -1
        for u in _bits(p | x):
            cnt = (adj[u] & p).bit_count()
            if cnt > best:
                best = cnt
                pivot = u
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted(tuple(_bits(m)) for m in found)


def find_claw(g: Graph, r: int) -> Claw | None:
    """First claw with exactly r leaves: lowest center, then lexicographically
    least leaf set.  None if the graph has no such induced star."""
    if r < 1:
        raise InputError(f"claw size must be positive, got {r}")
    for center in range(g.n):
        nbrs = g.neighbors(center)
        if len(nbrs) < r:
            continue
        leaves = _independent_subset(g, nbrs, r)
        if leaves is not None:
            return Claw(center, leaves)
    return None


def _independent_subset(g: Graph, pool: tuple[int, ...], r: int) -> tuple[int, ...] | None:
    """Lexicographically least r-subset of pool that is pairwise non-adjacent."""
    chosen: list[int] = []
    forbidden = [0]  # union of adjacency masks of chosen vertices

    def grow(start: int) -> bool:
        if len(chosen) == r:
            return True
        remaining = r - len(chosen)
        for idx in range(start, len(pool) - remaining + 1):
            v = pool[idx]
            if forbidden[-1] >> v & 1:
                continue
            chosen.append(v)
            forbidden.append(forbidden[-1] | g.adjacency_mask(v))
            if grow(idx + 1):
                return True
            chosen.pop()
            forbidden.pop()
        return False

    return tuple(chosen) if grow(0) else None
