"""Membership tests for line graphs of k-uniform hypergraphs with bounded
pair multiplicity.

Four necessary conditions are checked as threshold predicates on the
graph: no (k+1)-claw, no non-adjacent pair with more than p*k^2 common
neighbors, no vertex attached to more than p*k vertices of a big maximal
clique, and no two big maximal cliques sharing more than p vertices
("big" means size at least p*k^2 + (p-2)*k + 2).  Any violation yields a
checkable NonMember witness.  If all four pass and the minimum edge
degree reaches p*k^3 + (p-3)*k + 1, the family of big maximal cliques is
a valid cover and certifies membership; below that edge-degree bound the
verdict is Inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InputError
from .graph import Claw, Graph, find_claw, maximal_cliques, min_edge_degree
from .reconstruction import CliqueCover, krausz_cover


@dataclass(frozen=True)
class Thresholds:
    """Exact integer bounds derived from (k, p)."""

    k: int
    p: int
    edge_degree_bound: int  # p*k^3 + (p-3)*k + 1
    clique_size_bound: int  # p*k^2 + (p-2)*k + 2


def thresholds(k: int, p: int) -> Thresholds:
    if k < 2 or p < 1:
        raise InputError(f"need k >= 2 and p >= 1, got k={k}, p={p}")
    return Thresholds(
        k=k,
        p=p,
        edge_degree_bound=p * k**3 + (p - 3) * k + 1,
        clique_size_bound=p * k**2 + (p - 2) * k + 2,
    )


@dataclass(frozen=True)
class ClawWitness:
    claw: Claw


@dataclass(frozen=True)
class F1Witness:
    """Non-adjacent pair with p*k^2 + 1 listed common neighbors."""

    a: int
    b: int
    common: tuple[int, ...]


@dataclass(frozen=True)
class F2Witness:
    """Big maximal clique plus an outside vertex attached to p*k + 1 of it."""

    clique: tuple[int, ...]
    vertex: int
    attachment: tuple[int, ...]


@dataclass(frozen=True)
class F3Witness:
    """Two big maximal cliques sharing p + 1 listed vertices."""

    clique_a: tuple[int, ...]
    clique_b: tuple[int, ...]
    shared: tuple[int, ...]


Witness = Union[ClawWitness, F1Witness, F2Witness, F3Witness]


@dataclass(frozen=True)
class Member:
    cover: CliqueCover


@dataclass(frozen=True)
class NonMember:
    witness: Witness


@dataclass(frozen=True)
class Inconclusive:
    """All four checks passed but the edge-degree bound does not apply."""

    min_edge_degree: int
    required: int

    @property
    def reason(self) -> str:
        return (
            f"minimum edge degree {self.min_edge_degree} is below the certified "
            f"bound {self.required}; membership is undecided"
        )


Verdict = Union[Member, NonMember, Inconclusive]


def _first_bits(mask: int, count: int) -> tuple[int, ...]:
    out = []
    while mask and len(out) < count:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def check_claw(g: Graph, k: int) -> ClawWitness | None:
    """A claw with k+1 leaves, if any."""
    if k < 2:
        raise InputError(f"need k >= 2, got k={k}")
    claw = find_claw(g, k + 1)
    return ClawWitness(claw) if claw is not None else None


def check_f1(g: Graph, t: Thresholds) -> F1Witness | None:
    """First non-adjacent pair with more than p*k^2 common neighbors."""
    needed = t.p * t.k**2 + 1
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            common = g.adjacency_mask(a) & g.adjacency_mask(b)
            if common.bit_count() >= needed:
                return F1Witness(a, b, _first_bits(common, needed))
    return None


def check_f2(g: Graph, t: Thresholds) -> F2Witness | None:
    """First outside vertex attached to more than p*k vertices of a big
    maximal clique."""
    if t.clique_size_bound > g.n:
        return None
    needed = t.p * t.k + 1
    for clique in maximal_cliques(g):
        if len(clique) < t.clique_size_bound:
            continue
        cmask = 0
        for u in clique:
            cmask |= 1 << u
        for v in range(g.n):
            if cmask >> v & 1:
                continue
            attached = g.adjacency_mask(v) & cmask
            if attached.bit_count() >= needed:
                return F2Witness(clique, v, _first_bits(attached, needed))
    return None


def check_f3(g: Graph, t: Thresholds) -> F3Witness | None:
    """First pair of big maximal cliques sharing more than p vertices."""
    if t.clique_size_bound > g.n:
        return None
    needed = t.p + 1
    big = [c for c in maximal_cliques(g) if len(c) >= t.clique_size_bound]
    masks = []
    for clique in big:
        m = 0
        for u in clique:
            m |= 1 << u
        masks.append(m)
    for i in range(len(big)):
        for j in range(i + 1, len(big)):
            shared = masks[i] & masks[j]
            if shared.bit_count() >= needed:
                return F3Witness(big[i], big[j], _first_bits(shared, needed))
    return None


def recognize(g: Graph, k: int, p: int) -> Verdict:
    """Decide membership, producing a certificate either way.

    A forbidden-structure witness refutes membership outright.  With no
    witness and minimum edge degree meeting the bound, the big-clique
    family is returned as a certifying cover.  Otherwise the result is
    Inconclusive: nothing is asserted below the bound.

    Checks run in the fixed order F1, claw, F2, F3, so the returned
    witness is deterministic when several structures are present.
    """
    t = thresholds(k, p)
    if g.edge_count == 0:
        raise InputError("recognition needs a graph with at least one edge")

    witness: Witness | None = check_f1(g, t)
    if witness is None:
        witness = check_claw(g, k)
    if witness is None:
        witness = check_f2(g, t)
    if witness is None:
        witness = check_f3(g, t)
    if witness is not None:
        return NonMember(witness)

    degree = min_edge_degree(g)
    if degree >= t.edge_degree_bound:
        return Member(krausz_cover(g, t))
    return Inconclusive(min_edge_degree=degree, required=t.edge_degree_bound)
