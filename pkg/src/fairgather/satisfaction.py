"""Maximum satisfaction: orient edges so as many nodes as possible get at
least one incident edge pointed at them (at least one child home).

The solver peels: while some unsatisfied node has exactly one unoriented
edge left, that edge is forced (orienting it anywhere else abandons the
node, and an exchange argument shows pointing it home never loses). When
no such node remains, every unsatisfied node has two or more unoriented
edges; satisfying one of them frees at most one new forced node, so the
peel queue is drained again after every pick. The result is checked
against a brute-force orientation search in the tests rather than argued
here.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass

from .graph import ConflictGraph

logger = logging.getLogger(__name__)

Orientation = dict[tuple[int, int], int]


@dataclass
class PeelStats:
    """Operation counter (scan steps, orientations, queue traffic) and
    the number of times the residual phase saw more than one forced node
    at once, which the theory says should not happen."""

    ops: int = 0
    residual_anomalies: int = 0


def max_satisfaction(g: ConflictGraph) -> tuple[Orientation, int]:
    """Orientation maximizing the number of satisfied nodes, and that number."""
    orientation, count, _ = max_satisfaction_with_stats(g)
    return orientation, count


def max_satisfaction_with_stats(g: ConflictGraph) -> tuple[Orientation, int, PeelStats]:
    edges = g.edges()
    eid = {e: i for i, e in enumerate(edges)}
    head: list[int | None] = [None] * len(edges)
    # incidence sorted by neighbor id, so "first unoriented" = lowest neighbor
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in g.nodes()}
    for (u, v), i in eid.items():
        incident[u].append((v, i))
        incident[v].append((u, i))
    for lst in incident.values():
        lst.sort()

    undeg = {v: g.degree(v) for v in g.nodes()}
    satisfied = {v: False for v in g.nodes()}
    ptr = {v: 0 for v in g.nodes()}
    stats = PeelStats()
    pending = 0  # unsatisfied nodes with exactly one unoriented edge

    def entering(v: int) -> bool:
        return not satisfied[v] and undeg[v] == 1

    def next_unoriented(v: int) -> tuple[int, int]:
        lst = incident[v]
        while head[lst[ptr[v]][1]] is not None:
            ptr[v] += 1
            stats.ops += 1
        return lst[ptr[v]]

    def orient_toward(v: int) -> None:
        nonlocal pending
        u, i = next_unoriented(v)
        was_pending = entering(u), entering(v)
        head[i] = v
        undeg[u] -= 1
        undeg[v] -= 1
        satisfied[v] = True
        stats.ops += 1
        if was_pending[1]:
            pending -= 1
        if was_pending[0] != entering(u):
            pending += 1 if entering(u) else -1
        if entering(u):
            heapq.heappush(heap, u)
            stats.ops += 1

    heap = [v for v in g.nodes() if entering(v)]
    heapq.heapify(heap)
    pending = len(heap)

    def drain(residual: bool) -> None:
        while heap:
            v = heapq.heappop(heap)
            stats.ops += 1
            if satisfied[v] or undeg[v] != 1:
                continue  # stale entry
            if residual and pending > 1:
                stats.residual_anomalies += 1
            orient_toward(v)

    drain(residual=False)
    for v in sorted(g.nodes()):
        stats.ops += 1
        if satisfied[v] or undeg[v] == 0:
            continue
        orient_toward(v)
        drain(residual=True)

    # Leftover edges join two satisfied nodes; direction is a formality.
    orientation: Orientation = {}
    for (u, v), i in eid.items():
        orientation[(u, v)] = head[i] if head[i] is not None else u
    if stats.residual_anomalies:
        logger.warning(
            "residual peeling saw %d simultaneous forced nodes; worth a look",
            stats.residual_anomalies,
        )
    return orientation, sum(satisfied.values()), stats


def satisfied_nodes(g: ConflictGraph, orientation: Orientation) -> set[int]:
    """Nodes with at least one incident edge oriented toward them."""
    missing = [e for e in g.edges() if e not in orientation]
    if missing:
        raise ValueError(f"orientation misses edges {missing[:3]}")
    return set(orientation.values())


def brute_force_satisfaction(g: ConflictGraph) -> int:
    """Maximum satisfied count over all edge orientations (test oracle).

    Exhaustive per connected component, with two sound cut-offs: stop a
    branch once it cannot touch more nodes than the best seen, and stop a
    component once every node in it is satisfied.
    """
    if g.num_edges() > 20:
        raise ValueError("brute force is capped at 20 edges")
    total = 0
    for comp in g.connected_components():
        index = {v: i for i, v in enumerate(comp)}
        edges = [(u, v) for u, v in g.edges() if u in index]
        if not edges:
            continue
        masks = [(1 << index[u], 1 << index[v]) for u, v in edges]
        full = (1 << len(comp)) - 1
        # suffix[k] = nodes reachable by edges k.. (upper bound on late gains)
        suffix = [0] * (len(edges) + 1)
        for k in range(len(edges) - 1, -1, -1):
            suffix[k] = suffix[k + 1] | masks[k][0] | masks[k][1]
        best = 0

        def explore(k: int, sat: int) -> None:
            nonlocal best
            if sat == full:
                best = len(comp)
                return
            if k == len(masks) or best == len(comp):
                best = max(best, bin(sat).count("1"))
                return
            if bin(sat | suffix[k]).count("1") <= best:
                return
            explore(k + 1, sat | masks[k][0])
            explore(k + 1, sat | masks[k][1])

        explore(0, 0)
        total += best
    return total


def alternating_schedule(g: ConflictGraph, v: int, t: int) -> bool:
    """Satisfied-or-not for node v on holiday t under strict alternation.

    Every couple alternates: their edge points to its lower-id endpoint on
    odd holidays and to its higher-id endpoint on even ones, so any node
    with a neighbor is satisfied at least every other holiday. A degree-0
    node is never satisfied; callers should treat such nodes separately.
    """
    if t < 1:
        raise ValueError("holidays are numbered from 1")
    if not g.has_node(v):
        raise ValueError(f"unknown node {v}")
    if t % 2 == 1:
        return any(u > v for u in g.neighbors(v))
    return any(u < v for u in g.neighbors(v))
