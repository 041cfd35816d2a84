"""Partition of all k-subsets of {1..N} into balanced classes, built by
induction on the number of distributed elements, one integral max-flow
per step.

With L = lcm(N, k) and M = k*C(N,k)/L, the M classes each end up with
L/k subsets, and each element of the ground set occurs exactly L/N times
per class.  During the induction the classes hold partial sets drawn
from the first `level` elements; introducing element level+1 means
choosing, per class, which partial sets grow.  Feasible choices are
exactly the integral flows of a bipartite network (classes on one side,
distinct partial sets on the other) in which every source and sink arc
is saturated; the saturating value is C(N-1, k-1) at every step.

The class count times L/k equals C(N,k), so the final classes partition
the full family of k-subsets.  Taking the first d*N/L classes as edges
realizes the constant degree sequence (d, ..., d), which is possible
if and only if k divides d*N.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, lcm
from typing import Iterator, Mapping

from .errors import (
    DivisibilityError,
    InputError,
    InternalContradictionError,
    ResourceLimitError,
    UnrealizableError,
)
from .hypergraph import Hypergraph

COMB_GUARD = 2**62  # refuse ground sets whose subset family cannot be materialized


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_to_set(mask: int) -> tuple[int, ...]:
    """Bitmask over bits 0..N-1 to a sorted tuple of 1-based elements."""
    return tuple(b + 1 for b in _bits(mask))


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with integer arc capacities; parallel arcs allowed."""

    node_count: int
    arcs: tuple[tuple[int, int, int], ...]  # (tail, head, capacity)
    source: int
    sink: int

    def __post_init__(self):
        n = self.node_count
        if n < 2:
            raise InputError(f"network needs at least 2 nodes, got {n}")
        if not (0 <= self.source < n and 0 <= self.sink < n):
            raise InputError("source or sink outside the node range")
        if self.source == self.sink:
            raise InputError("source and sink must differ")
        for i, (tail, head, capacity) in enumerate(self.arcs):
            if not (0 <= tail < n and 0 <= head < n):
                raise InputError(f"arc {i} has an endpoint outside [0, {n})")
            if tail == head:
                raise InputError(f"arc {i} is a self-loop at node {tail}")
            if capacity < 0:
                raise InputError(f"arc {i} has negative capacity {capacity}")
            if head == self.source:
                raise InputError(f"arc {i} enters the source")
            if tail == self.sink:
                raise InputError(f"arc {i} leaves the sink")


@dataclass(frozen=True)
class Flow:
    """Integral feasible flow, one value per arc of the originating network."""

    arc_flows: tuple[int, ...]
    value: int


def max_flow(net: FlowNetwork) -> Flow:
    """Deterministic integral maximum flow (Dinic).

    Residual arcs are scanned in insertion order at every node, so the
    per-arc flow values are a pure function of the network.
    """
    n = net.node_count
    # residual structure: arc i -> slots 2i (forward) and 2i+1 (reverse)
    to: list[int] = []
    residual: list[int] = []
    out_arcs: list[list[int]] = [[] for _ in range(n)]
    for i, (tail, head, capacity) in enumerate(net.arcs):
        out_arcs[tail].append(2 * i)
        to.append(head)
        residual.append(capacity)
        out_arcs[head].append(2 * i + 1)
        to.append(tail)
        residual.append(0)

    source, sink = net.source, net.sink
    total = 0
    level = [-1] * n

    def build_levels() -> bool:
        for v in range(n):
            level[v] = -1
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for slot in out_arcs[u]:
                v = to[slot]
                if residual[slot] > 0 and level[v] == -1:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level[sink] != -1

    while build_levels():
        cursor = [0] * n
        path: list[int] = []
        u = source
        while True:
            if u == sink:
                push = min(residual[slot] for slot in path)
                total += push
                retreat = -1
                for idx, slot in enumerate(path):
                    residual[slot] -= push
                    residual[slot ^ 1] += push
                    if residual[slot] == 0 and retreat == -1:
                        retreat = idx
                u = to[path[retreat] ^ 1]  # tail of the first saturated arc
                del path[retreat:]
                continue
            advanced = False
            while cursor[u] < len(out_arcs[u]):
                slot = out_arcs[u][cursor[u]]
                if residual[slot] > 0 and level[to[slot]] == level[u] + 1:
                    path.append(slot)
                    u = to[slot]
                    advanced = True
                    break
                cursor[u] += 1
            if advanced:
                continue
            if u == source:
                break
            last = path.pop()
            u = to[last ^ 1]
            cursor[u] += 1

    flows = tuple(residual[2 * i + 1] for i in range(len(net.arcs)))
    return Flow(arc_flows=flows, value=total)


@dataclass(frozen=True)
class PartitionState:
    """Snapshot of the induction: partial sets over the first `level`
    elements, held per class as mask -> multiplicity."""

    ground_size: int
    subset_size: int
    level: int
    classes: tuple[Mapping[int, int], ...]

    @property
    def lcm_value(self) -> int:
        return lcm(self.ground_size, self.subset_size)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def sets_per_class(self) -> int:
        return self.lcm_value // self.subset_size

    @property
    def element_uses_per_class(self) -> int:
        return self.lcm_value // self.ground_size


@dataclass(frozen=True)
class ExtensionNetwork:
    """Flow network for one induction step plus labels tying each unit arc
    back to (class index, partial-set mask, copy index)."""

    network: FlowNetwork
    unit_arc_labels: tuple[tuple[int, int, int] | None, ...]


def initial_state(ground_size: int, subset_size: int) -> PartitionState:
    """Base case: element 1 distributed evenly, the rest of each class empty."""
    _validate_parameters(ground_size, subset_size)
    big = lcm(ground_size, subset_size)
    class_count = subset_size * comb(ground_size, subset_size) // big
    singles = big // ground_size
    empties = big // subset_size - singles
    base: dict[int, int] = {1: singles}
    if empties:
        base[0] = empties
    return PartitionState(
        ground_size=ground_size,
        subset_size=subset_size,
        level=1,
        classes=tuple(dict(base) for _ in range(class_count)),
    )


def build_extension_network(state: PartitionState) -> ExtensionNetwork:
    """Network whose saturating integral flows pick, per class, which
    partial sets receive element level+1.

    Source arcs carry L/N to each class; each copy of a partial set T of
    size < k is a unit arc from its class to T's node; T's node drains
    into the sink with capacity C(N-1-level, k-|T|-1).
    """
    big_n = state.ground_size
    k = state.subset_size
    ell = state.level
    if ell >= big_n:
        raise InputError(f"all {big_n} elements already distributed")

    class_count = state.class_count
    growable = sorted(
        {mask for cls in state.classes for mask in cls if mask.bit_count() < k}
    )
    node_of = {mask: 1 + class_count + j for j, mask in enumerate(growable)}
    source = 0
    sink = 1 + class_count + len(growable)

    arcs: list[tuple[int, int, int]] = []
    labels: list[tuple[int, int, int] | None] = []
    per_class = state.element_uses_per_class
    for i in range(class_count):
        arcs.append((source, 1 + i, per_class))
        labels.append(None)
    for i, cls in enumerate(state.classes):
        for mask in sorted(cls):
            if mask.bit_count() >= k:
                continue
            for copy in range(cls[mask]):
                arcs.append((1 + i, node_of[mask], 1))
                labels.append((i, mask, copy))
    for mask in growable:
        room = comb(big_n - 1 - ell, k - mask.bit_count() - 1)
        arcs.append((node_of[mask], sink, room))
        labels.append(None)

    network = FlowNetwork(
        node_count=sink + 1, arcs=tuple(arcs), source=source, sink=sink
    )
    return ExtensionNetwork(network=network, unit_arc_labels=tuple(labels))


def extend(state: PartitionState) -> PartitionState:
    """Distribute element level+1 according to a saturating integral flow."""
    ext = build_extension_network(state)
    flow = max_flow(ext.network)
    expected = comb(state.ground_size - 1, state.subset_size - 1)
    if flow.value != expected:
        raise InternalContradictionError(
            f"extension flow has value {flow.value}, expected {expected} "
            f"at level {state.level}"
        )
    new_classes = tuple(dict(cls) for cls in state.classes)
    bit = 1 << state.level  # element level+1
    for arc_index, label in enumerate(ext.unit_arc_labels):
        if label is None or flow.arc_flows[arc_index] == 0:
            continue
        class_index, mask, _copy = label
        cls = new_classes[class_index]
        cls[mask] -= 1
        if cls[mask] == 0:
            del cls[mask]
        grown = mask | bit
        cls[grown] = cls.get(grown, 0) + 1
    return PartitionState(
        ground_size=state.ground_size,
        subset_size=state.subset_size,
        level=state.level + 1,
        classes=new_classes,
    )


def state_violations(state: PartitionState) -> list[str]:
    """All invariant violations of the state; empty when healthy.

    Checked: per-class set totals, per-class per-element occurrence
    counts, and the global multiplicity of every partial set over the
    distributed elements.
    """
    big_n, k, ell = state.ground_size, state.subset_size, state.level
    problems: list[str] = []
    distributed = (1 << ell) - 1
    for i, cls in enumerate(state.classes):
        total = 0
        element_uses = [0] * ell
        for mask, count in cls.items():
            if count < 1:
                problems.append(f"class {i}: nonpositive multiplicity for {mask:b}")
            if mask & ~distributed:
                problems.append(f"class {i}: set uses an undistributed element")
            if mask.bit_count() > k:
                problems.append(f"class {i}: set larger than {k}")
            total += count
            for b in _bits(mask):
                element_uses[b] += count
        if total != state.sets_per_class:
            problems.append(
                f"class {i}: holds {total} sets, expected {state.sets_per_class}"
            )
        for b in range(ell):
            if element_uses[b] != state.element_uses_per_class:
                problems.append(
                    f"class {i}: element {b + 1} occurs {element_uses[b]} times, "
                    f"expected {state.element_uses_per_class}"
                )
    totals: dict[int, int] = {}
    for cls in state.classes:
        for mask, count in cls.items():
            totals[mask] = totals.get(mask, 0) + count
    for size in range(min(k, ell) + 1):
        for combo in combinations(range(ell), size):
            mask = 0
            for b in combo:
                mask |= 1 << b
            expected = comb(big_n - ell, k - size)
            if totals.get(mask, 0) != expected:
                problems.append(
                    f"set {_mask_to_set(mask)} occurs {totals.get(mask, 0)} times "
                    f"globally, expected {expected}"
                )
    return problems


def _validate_parameters(ground_size: int, subset_size: int) -> None:
    if subset_size < 2 or subset_size > ground_size:
        raise InputError(
            f"need 2 <= k <= N, got k={subset_size}, N={ground_size}"
        )
    if comb(ground_size, subset_size) >= COMB_GUARD:
        raise ResourceLimitError(
            f"C({ground_size}, {subset_size}) exceeds the size guard"
        )


@lru_cache(maxsize=None)
def _baranyai_classes(ground_size: int, subset_size: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    state = initial_state(ground_size, subset_size)
    while state.level < state.ground_size:
        state = extend(state)
    out = []
    for cls in state.classes:
        sets = []
        for mask, count in cls.items():
            if count != 1 or mask.bit_count() != subset_size:
                raise InternalContradictionError(
                    "final state holds a partial or repeated set"
                )
            sets.append(_mask_to_set(mask))
        sets.sort()
        out.append(tuple(sets))
    return tuple(out)


def baranyai_partition(ground_size: int, subset_size: int) -> list[list[tuple[int, ...]]]:
    """Partition all k-subsets of {1..N} into M = k*C(N,k)/lcm(N,k) classes,
    each class holding every element equally often.

    Deterministic: the same (N, k) always yields the same classes in the
    same order.
    """
    _validate_parameters(ground_size, subset_size)
    return [list(cls) for cls in _baranyai_classes(ground_size, subset_size)]


def regular_hypergraph(
    ground_size: int, subset_size: int, degree: int, strict_simple: bool = False
) -> Hypergraph:
    """k-uniform hypergraph on {0..N-1} in which every vertex has the given
    degree; exists iff k divides degree*N.

    Edges are whole classes of the partition, so the result is simple
    whenever degree <= C(N-1, k-1); beyond that the classes are reused
    cyclically and edges repeat (rejected if strict_simple is set).
    """
    _validate_parameters(ground_size, subset_size)
    if degree < 1:
        raise InputError(f"degree must be positive, got {degree}")
    if (degree * ground_size) % subset_size != 0:
        raise DivisibilityError("k does not divide d*N")
    big = lcm(ground_size, subset_size)
    wanted = degree * ground_size // big
    classes = _baranyai_classes(ground_size, subset_size)
    if strict_simple and wanted > len(classes):
        raise UnrealizableError(
            f"degree {degree} exceeds C(N-1, k-1) = "
            f"{comb(ground_size - 1, subset_size - 1)}; no simple realization"
        )
    edges = []
    for i in range(wanted):
        for subset in classes[i % len(classes)]:
            edges.append(tuple(x - 1 for x in subset))
    return Hypergraph(ground_size, edges)
