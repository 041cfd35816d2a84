"""Shared builders for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from hyperline import Graph, Hypergraph


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n - 1)] + [(0, n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph from a bitmask over the C(n,2) vertex pairs in lexicographic order."""
    edges = []
    for i, pair in enumerate(combinations(range(n), 2)):
        if mask >> i & 1:
            edges.append(pair)
    return Graph(n, edges)


def all_graphs(n: int):
    """Every labeled graph on exactly n vertices."""
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        yield graph_from_mask(n, mask)


def random_bounded_hypergraph(
    rng: random.Random, k: int, p: int, max_edges: int = 12
) -> Hypergraph:
    """Random k-uniform hypergraph with pair multiplicity <= p.

    Edges are sampled one at a time and rejected when they would push
    some pair over p; sampling stops early if the instance saturates.
    """
    n = rng.randint(k, 3 * k + 2)
    target = rng.randint(1, max_edges)
    pair_use: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, ...]] = []
    attempts = 0
    while len(edges) < target and attempts < 200:
        attempts += 1
        e = tuple(sorted(rng.sample(range(n), k)))
        if any(pair_use.get(pair, 0) >= p for pair in combinations(e, 2)):
            continue
        for pair in combinations(e, 2):
            pair_use[pair] = pair_use.get(pair, 0) + 1
        edges.append(e)
    if not edges:
        edges.append(tuple(range(k)))
    return Hypergraph(n, edges)
