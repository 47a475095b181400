"""Schedule verification: independence, unhappiness intervals, detected
periods, and brute-force oracles.

All checks here recompute from the raw happy sets, never from scheduler
internals, so they catch bugs in the constructions they audit. Gap checks
are anchored at each node's first happy holiday: the warm-up before a node
first hosts is bounded separately by its initial color and is not counted
against theorem-level bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .graph import ConflictGraph
from .schedulers import Schedule


@dataclass(frozen=True)
class NodeStats:
    """Happiness statistics for one node over a window."""

    happy: tuple[int, ...]
    mul: int                    # longest run of consecutive unhappy holidays
    detected_period: int        # smallest period consistent with the window; 0 = none found
    first_happy: int | None
    max_gap: int | None         # max spacing between happy holidays from first_happy on,
                                # counting the stretch to the window end; None if never happy


@dataclass(frozen=True)
class ScheduleReport:
    window: tuple[int, int]
    nodes: dict[int, NodeStats]
    independence_violations: tuple[tuple[int, int, int], ...]  # (holiday, u, v)

    @property
    def independent(self) -> bool:
        return not self.independence_violations


@dataclass(frozen=True)
class GapViolation:
    node: int
    gap: int
    bound: int


def smallest_window_period(flags: Sequence[bool]) -> int:
    """Smallest p with flags[i] == flags[i+p] across the window, if p is
    small enough to be seen twice (p <= len/2); otherwise 0."""
    n = len(flags)
    if n == 0:
        return 0
    # classic border computation; smallest period = n - longest border
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and flags[i] != flags[k]:
            k = border[k - 1]
        if flags[i] == flags[k]:
            k += 1
        border[i] = k
    period = n - border[-1]
    return period if period <= n // 2 else 0


def _node_stats(flags: list[bool], t0: int, t1: int) -> NodeStats:
    happy = tuple(t0 + i for i, f in enumerate(flags) if f)
    longest = run = 0
    for f in flags:
        run = 0 if f else run + 1
        longest = max(longest, run)
    if happy:
        gaps = [b - a for a, b in zip(happy, happy[1:])]
        gaps.append(t1 - happy[-1] + 1)
        max_gap = max(gaps)
    else:
        max_gap = None
    return NodeStats(
        happy=happy,
        mul=longest,
        detected_period=smallest_window_period(flags),
        first_happy=happy[0] if happy else None,
        max_gap=max_gap,
    )


def report_from_happy_sets(
    g: ConflictGraph,
    happy_sets: Mapping[int, set[int]],
    window: tuple[int, int],
) -> ScheduleReport:
    """Statistics and independence audit from explicit per-holiday happy sets."""
    t0, t1 = window
    if t0 < 1 or t1 < t0:
        raise ValueError(f"bad window {window}")
    missing = [t for t in range(t0, t1 + 1) if t not in happy_sets]
    if missing:
        raise ValueError(f"happy sets missing holidays {missing[:3]}")

    violations = []
    nodes = g.nodes()
    node_set = set(nodes)
    flags = {v: [] for v in nodes}
    for t in range(t0, t1 + 1):
        hs = happy_sets[t]
        unknown = hs - node_set
        if unknown:
            raise ValueError(f"holiday {t} lists unknown nodes {sorted(unknown)[:3]}")
        for u in hs:
            for w in g.neighbors(u):
                if u < w and w in hs:
                    violations.append((t, u, w))
        for v in nodes:
            flags[v].append(v in hs)

    stats = {v: _node_stats(flags[v], t0, t1) for v in nodes}
    return ScheduleReport(window=(t0, t1), nodes=stats, independence_violations=tuple(violations))


def report(g: ConflictGraph, s: Schedule, window: tuple[int, int]) -> ScheduleReport:
    """Audit a schedule over [t0, t1] (t1 capped by the horizon for replays)."""
    t0, t1 = window
    horizon = getattr(s, "horizon", None)
    if horizon is not None and t1 > horizon:
        raise ValueError(f"window end {t1} beyond replay horizon {horizon}")
    if t0 < 1 or t1 < t0:
        raise ValueError(f"bad window {window}")
    happy_sets = {t: s.happy_set(t) for t in range(t0, t1 + 1)}
    return report_from_happy_sets(g, happy_sets, window)


def check_gap_bounds(
    g: ConflictGraph,
    rep: ScheduleReport,
    bound_fn: Callable[[int], int],
) -> list[GapViolation]:
    """Nodes whose happy-to-happy spacing (anchored at first happiness)
    exceeds bound_fn(node). A node that is never happy in the window counts
    as one big gap."""
    t0, t1 = rep.window
    out = []
    for v, stats in rep.nodes.items():
        gap = stats.max_gap if stats.max_gap is not None else t1 - t0 + 2
        bound = bound_fn(v)
        if gap > bound:
            out.append(GapViolation(node=v, gap=gap, bound=bound))
    return out


def brute_force_mis(g: ConflictGraph) -> int:
    """Exact maximum independent set size by subset enumeration (<= 20 nodes)."""
    nodes = g.nodes()
    if len(nodes) > 20:
        raise ValueError("brute force is capped at 20 nodes")
    index = {v: i for i, v in enumerate(nodes)}
    adj_mask = [0] * len(nodes)
    for u, v in g.edges():
        adj_mask[index[u]] |= 1 << index[v]
        adj_mask[index[v]] |= 1 << index[u]
    best = 0
    for mask in range(1 << len(nodes)):
        m = mask
        ok = True
        while m:
            i = (m & -m).bit_length() - 1
            if adj_mask[i] & mask:
                ok = False
                break
            m &= m - 1
        if ok:
            best = max(best, bin(mask).count("1"))
    return best


def happy_set_vs_mis(g: ConflictGraph, s: Schedule, window: tuple[int, int]) -> tuple[int, int]:
    """(largest happy set seen in the window, exact MIS size).

    Raises if the observed maximum exceeds the MIS size, which would mean
    some happy set was not independent.
    """
    t0, t1 = window
    observed = max(len(s.happy_set(t)) for t in range(t0, t1 + 1))
    mis = brute_force_mis(g)
    if observed > mis:
        raise AssertionError(f"happy set of size {observed} exceeds MIS {mis}")
    return observed, mis
