"""Deterministic invariant battery behind the ``selftest`` CLI command.

Every check is pure and seedless, so consecutive runs print identical
bytes.  Failures raise AssertionError with a short message; the runner
reports the first failure and exits nonzero.
"""

from __future__ import annotations

from typing import Callable, TextIO

from . import fileio
from .baranyai import baranyai_partition, max_flow, FlowNetwork, initial_state, extend, state_violations
from .graph import Graph, common_neighborhood, edge_degree, find_claw, line_graph, maximal_cliques, min_edge_degree
from .hypergraph import Hypergraph
from .oracle import cover_search, graphs_isomorphic, scan_regular_realizability
from .recognition import (
    ClawWitness,
    F1Witness,
    Inconclusive,
    Member,
    NonMember,
    recognize,
    thresholds,
)
from .reconstruction import cover_to_hypergraph, hypergraph_to_cover, reconstruct, validate_cover


def _complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)])


def _check_thresholds() -> None:
    t = thresholds(2, 1)
    assert (t.edge_degree_bound, t.clique_size_bound) == (5, 4), t
    t = thresholds(3, 1)
    assert (t.edge_degree_bound, t.clique_size_bound) == (22, 8), t
    t = thresholds(2, 2)
    assert (t.edge_degree_bound, t.clique_size_bound) == (15, 10), t


def _check_hypergraph_queries() -> None:
    hg = Hypergraph(5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    assert hg.degree(0) == 2
    assert hg.pair_degree(0, 1) == 2
    assert hg.degree_sequence() == [2, 2, 2, 2, 1]
    assert hg.multiplicity() == 2
    assert hg.is_k_uniform(3)
    doubled = Hypergraph(2, [(0, 1), (0, 1)])
    assert doubled.degree(0) == 2 and doubled.pair_degree(0, 1) == 2


def _check_graph_queries() -> None:
    tri = line_graph(Hypergraph(3, [(0, 1), (1, 2), (0, 2)]))
    assert tri == _complete(3)
    assert line_graph(Hypergraph(5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])) == _complete(3)
    assert edge_degree(_complete(4), 0, 1) == 2
    assert min_edge_degree(_cycle(5)) == 0
    square = _cycle(4)
    assert common_neighborhood(square, [0, 2]) == frozenset({1, 3})
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert maximal_cliques(bowtie) == [(0, 1, 2), (2, 3, 4)]
    claw = find_claw(Graph(4, [(0, 1), (0, 2), (0, 3)]), 3)
    assert claw is not None and claw.center == 0 and claw.leaves == (1, 2, 3)


def _check_recognition() -> None:
    verdict = recognize(_complete(7), 2, 1)
    assert isinstance(verdict, Member)
    assert verdict.cover.cliques == ((0, 1, 2, 3, 4, 5, 6),)
    verdict = recognize(Graph(4, [(0, 1), (0, 2), (0, 3)]), 2, 1)
    assert isinstance(verdict, NonMember) and isinstance(verdict.witness, ClawWitness)
    verdict = recognize(_cycle(5), 2, 1)
    assert isinstance(verdict, Inconclusive) and verdict.min_edge_degree == 0
    star = Graph(7, [(0, v) for v in range(2, 7)] + [(1, v) for v in range(2, 7)])
    verdict = recognize(star, 2, 1)
    assert isinstance(verdict, NonMember) and isinstance(verdict.witness, F1Witness)


def _check_reconstruction() -> None:
    for hg in (
        Hypergraph(4, [(0, 1), (0, 2), (0, 3)]),
        Hypergraph(5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)]),
        Hypergraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    ):
        k = len(hg.edges[0])
        p = hg.multiplicity()
        lg = line_graph(hg)
        rebuilt = cover_to_hypergraph(lg, hypergraph_to_cover(hg), k, max(p, 1))
        assert line_graph(rebuilt) == lg
    hg = reconstruct(_complete(7), 2, 1)
    assert line_graph(hg) == _complete(7)
    assert hg.is_k_uniform(2) and hg.multiplicity() <= 1


def _check_flow() -> None:
    net = FlowNetwork(3, ((0, 1, 2), (1, 2, 1)), source=0, sink=2)
    assert max_flow(net).value == 1
    net = FlowNetwork(
        4, ((0, 1, 3), (0, 2, 3), (1, 3, 2), (2, 3, 2)), source=0, sink=3
    )
    assert max_flow(net).value == 4
    net = FlowNetwork(
        4, ((0, 1, 2), (1, 2, 1), (1, 2, 1), (2, 3, 2)), source=0, sink=3
    )
    flow = max_flow(net)
    assert flow.value == 2 and flow.arc_flows[1] == 1 and flow.arc_flows[2] == 1


def _check_partition() -> None:
    for big_n in range(2, 8):
        for k in range(2, big_n + 1):
            state = initial_state(big_n, k)
            assert not state_violations(state), (big_n, k)
            while state.level < big_n:
                state = extend(state)
                assert not state_violations(state), (big_n, k, state.level)
    classes = baranyai_partition(4, 2)
    matchings = {frozenset(cls) for cls in classes}
    assert matchings == {
        frozenset({(1, 2), (3, 4)}),
        frozenset({(1, 3), (2, 4)}),
        frozenset({(1, 4), (2, 3)}),
    }
    assert baranyai_partition(3, 2) == [[(1, 2), (1, 3), (2, 3)]]


def _check_regular_scan() -> None:
    report = scan_regular_realizability(6, 4)
    assert report.ok, report.discrepancies


def _check_oracle() -> None:
    assert cover_search(Graph(4, [(0, 1), (0, 2), (0, 3)]), 2, 1) is None
    found = cover_search(_complete(3), 2, 1)
    assert found is not None and found.cliques == ((0, 1, 2),)
    ring = cover_search(_cycle(5), 2, 1)
    assert ring is not None and len(ring.cliques) == 5
    assert validate_cover(_cycle(5), ring, 2, 1)
    assert graphs_isomorphic(_cycle(4), Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)]))
    assert not graphs_isomorphic(_complete(3), Graph(3, [(0, 1), (1, 2)]))


def _check_fileio() -> None:
    hg = Hypergraph(5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    assert fileio.read_hypergraph(fileio.write_hypergraph(hg)) == hg
    g = _cycle(5)
    assert fileio.read_graph(fileio.write_graph(g)) == g
    classes = baranyai_partition(4, 2)
    text = fileio.write_partition(classes, 4, 2)
    assert fileio.read_partition(text) == (4, 2, classes)


CHECKS: tuple[tuple[str, Callable[[], None]], ...] = (
    ("thresholds", _check_thresholds),
    ("hypergraph-queries", _check_hypergraph_queries),
    ("graph-queries", _check_graph_queries),
    ("recognition-verdicts", _check_recognition),
    ("reconstruction-round-trip", _check_reconstruction),
    ("integral-max-flow", _check_flow),
    ("partition-invariants", _check_partition),
    ("regular-degree-scan", _check_regular_scan),
    ("oracle-cover-search", _check_oracle),
    ("file-round-trips", _check_fileio),
)


def run(out: TextIO) -> int:
    """Run every check; print one line each; 0 iff all pass."""
    failures = 0
    for name, check in CHECKS:
        try:
            check()
        except AssertionError as exc:
            failures += 1
            out.write(f"FAIL {name}: {exc}\n")
            continue
        out.write(f"ok {name}\n")
    if failures:
        out.write(f"SELFTEST FAIL checks={len(CHECKS)} failures={failures}\n")
        return 3
    out.write(f"SELFTEST PASS checks={len(CHECKS)}\n")
    return 0
