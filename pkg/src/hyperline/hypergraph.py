"""Hypergraph values: vertex count plus an ordered list of hyperedges.

Vertices are dense 0-based integers.  Edges are stored strictly sorted;
the position of an edge in the list is part of the hypergraph's identity
(edge i becomes vertex i of the line graph).  Repeated hyperedges are
allowed and count separately in all degree queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InputError


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        normalized = []
        for pos, edge in enumerate(edges):
            vs = sorted(edge)
            if not vs:
                raise InputError(f"edge {pos} is empty")
            for a, b in zip(vs, vs[1:]):
                if a == b:
                    raise InputError(f"edge {pos} repeats vertex {a}")
            if vs[0] < 0 or vs[-1] >= n:
                raise InputError(f"edge {pos} has a vertex outside [0, {n})")
            normalized.append(tuple(vs))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        """Number of hyperedges, counting repeats."""
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} outside [0, {self.n})")

    def degree(self, v: int) -> int:
        """Number of edges containing v (repeated edges count separately)."""
        self._check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def pair_degree(self, u: int, v: int) -> int:
        """Number of edges containing both u and v."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InputError("pair degree needs two distinct vertices")
        return sum(1 for e in self.edges if u in e and v in e)

    def multiplicity(self) -> int:
        """Maximum pair degree over all vertex pairs; 0 if no pair is covered."""
        if self.n < 2:
            return 0
        counts: dict[tuple[int, int], int] = {}
        for e in self.edges:
            for pair in combinations(e, 2):
                counts[pair] = counts.get(pair, 0) + 1
        return max(counts.values(), default=0)

    def is_k_uniform(self, k: int) -> bool:
        """True iff every edge has exactly k vertices (vacuously true if edgeless)."""
        if k < 1:
            raise InputError(f"uniformity must be positive, got {k}")
        return all(len(e) == k for e in self.edges)

    def is_linear(self) -> bool:
        """True iff no vertex pair lies in two edges (multiplicity at most 1)."""
        return self.multiplicity() <= 1

    def degree_sequence(self) -> list[int]:
        """Per-vertex degrees in vertex order."""
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return degs
