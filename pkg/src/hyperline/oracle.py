"""Brute-force ground truth for small instances.

`cover_search` decides membership by exhaustive backtracking over clique
covers, independently of the threshold-based recognizer, so the two can
be played against each other in tests.  Also here: a small-graph
isomorphism test and an exhaustive scan of the constant-degree
realizability criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .baranyai import regular_hypergraph
from .errors import DivisibilityError, InputError, ResourceLimitError
from .graph import Graph, _bits
from .reconstruction import CliqueCover

DEFAULT_BUDGET = 2_000_000
COVER_SIZE_BOUND = 8
ISO_SIZE_BOUND = 10


def _clique_masks(g: Graph) -> list[int]:
    """Masks of all cliques of g with at least 2 vertices."""
    out = []
    for mask in range(1, 1 << g.n):
        if mask.bit_count() < 2:
            continue
        ok = True
        for v in _bits(mask):
            if mask & ~g.adjacency_mask(v) & ~(1 << v):
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def cover_search(
    g: Graph,
    k: int,
    p: int,
    budget: int = DEFAULT_BUDGET,
    max_vertices: int = COVER_SIZE_BOUND,
) -> CliqueCover | None:
    """Exhaustive search for a clique cover with vertex load <= k and
    pairwise overlaps <= p; None is a definitive negative.

    Covers each edge in lexicographic order; candidate cliques for an
    edge are tried largest first, then lexicographically, and the first
    complete cover wins, so the result is deterministic.  Exceeding the
    vertex bound or the node budget raises rather than guessing.
    """
    if k < 2 or p < 1:
        raise InputError(f"need k >= 2 and p >= 1, got k={k}, p={p}")
    if budget < 1:
        raise InputError(f"budget must be positive, got {budget}")
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"graph has {g.n} vertices, oracle bound is {max_vertices}"
        )

    edge_list = list(g.edges())
    if not edge_list:
        return CliqueCover(g.n, [])

    edge_index = {e: i for i, e in enumerate(edge_list)}
    cliques = _clique_masks(g)
    covers_of: list[int] = []  # clique mask -> bitmap of covered edge indices
    for cmask in cliques:
        bitmap = 0
        vs = list(_bits(cmask))
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                bitmap |= 1 << edge_index[(vs[a], vs[b])]
        covers_of.append(bitmap)

    order = sorted(
        range(len(cliques)),
        key=lambda i: (-cliques[i].bit_count(), tuple(_bits(cliques[i]))),
    )
    candidates: list[list[int]] = [[] for _ in edge_list]
    for i in order:
        for e in _bits(covers_of[i]):
            candidates[e].append(i)

    all_covered = (1 << len(edge_list)) - 1
    load = [0] * g.n
    chosen: list[int] = []
    nodes = 0

    def search(covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceLimitError(f"cover search exceeded {budget} nodes")
        if covered == all_covered:
            return True
        uncovered = ~covered & all_covered
        first = (uncovered & -uncovered).bit_length() - 1
        for ci in candidates[first]:
            cmask = cliques[ci]
            conflict = False
            for v in _bits(cmask):
                if load[v] >= k:
                    conflict = True
                    break
            if not conflict:
                for prev in chosen:
                    if (cliques[prev] & cmask).bit_count() > p:
                        conflict = True
                        break
            if conflict:
                continue
            for v in _bits(cmask):
                load[v] += 1
            chosen.append(ci)
            if search(covered | covers_of[ci]):
                return True
            chosen.pop()
            for v in _bits(cmask):
                load[v] -= 1
        return False

    if search(0):
        return CliqueCover(g.n, [tuple(_bits(cliques[ci])) for ci in chosen])
    return None


def is_member_bruteforce(
    g: Graph, k: int, p: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """True iff an exhaustive search finds a valid clique cover."""
    return cover_search(g, k, p, budget=budget) is not None


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Adjacency-preserving bijection test by pruned backtracking."""
    if g1.n > ISO_SIZE_BOUND or g2.n > ISO_SIZE_BOUND:
        raise ResourceLimitError(f"isomorphism bound is {ISO_SIZE_BOUND} vertices")
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    n = g1.n

    def signature(g: Graph, v: int) -> tuple:
        return (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))

    sig1 = [signature(g1, v) for v in range(n)]
    sig2 = [signature(g2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False

    pools = {s: [v for v in range(n) if sig2[v] == s] for s in set(sig1)}
    order = sorted(range(n), key=lambda v: (len(pools[sig1[v]]), v))
    mapping = [-1] * n
    used = [False] * n

    def assign(idx: int) -> bool:
        if idx == n:
            return True
        u = order[idx]
        for v in pools[sig1[u]]:
            if used[v]:
                continue
            ok = True
            for w in g1.neighbors(u):
                if mapping[w] != -1 and not g2.has_edge(v, mapping[w]):
                    ok = False
                    break
            if ok:
                for w in range(n):
                    if mapping[w] != -1 and not g1.has_edge(u, w) and g2.has_edge(v, mapping[w]):
                        ok = False
                        break
            if ok:
                mapping[u] = v
                used[v] = True
                if assign(idx + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    return assign(0)


@dataclass
class ScanReport:
    """Outcome of the realizability scan; discrepancies should stay empty."""

    cases: int = 0
    discrepancies: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def scan_regular_realizability(n_max: int, k_max: int) -> ScanReport:
    """Check, for every N <= n_max, k <= k_max, and feasible degree, that
    constant-degree construction succeeds exactly when k divides d*N and
    that the built hypergraph has the right degrees."""
    if n_max < 2 or n_max > 12 or k_max < 2:
        raise InputError(f"scan bounds out of range: n_max={n_max}, k_max={k_max}")
    report = ScanReport()
    for big_n in range(2, n_max + 1):
        for k in range(2, min(k_max, big_n) + 1):
            for d in range(1, comb(big_n - 1, k - 1) + 1):
                report.cases += 1
                tag = f"N={big_n} k={k} d={d}"
                expect_ok = (d * big_n) % k == 0
                try:
                    hg = regular_hypergraph(big_n, k, d)
                except DivisibilityError:
                    if expect_ok:
                        report.discrepancies.append(f"{tag}: rejected but k divides dN")
                    continue
                if not expect_ok:
                    report.discrepancies.append(f"{tag}: built but k does not divide dN")
                    continue
                if not hg.is_k_uniform(k):
                    report.discrepancies.append(f"{tag}: edges are not {k}-uniform")
                if hg.degree_sequence() != [d] * big_n:
                    report.discrepancies.append(f"{tag}: degree sequence is not constant {d}")
    return report
