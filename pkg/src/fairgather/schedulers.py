"""Schedule constructions for the holiday gathering problem.

Three ways to decide who is happy (hosts all their children) on holiday t:

* phased greedy — replay of the recoloring process; happy sets depend on
  the whole history, gaps are bounded by degree + 1, no periodicity claim;
* omega-code color schedule — node with color c is happy exactly every
  2**rho(c) holidays, where rho is the omega codeword length;
* degree-bound slots — node picks an offset x and level j and is happy
  when t = x (mod 2**j), with 2**j <= 2 * degree.

Holidays are numbered from t = 1. Every schedule answers happy(v, t) and
guarantees the happy set is an independent set of its graph. Schedules are
frozen once built; the dynamic edge operations return new schedule values.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import codec
from .coloring import RoundLog, is_proper, local_random_color, smallest_free_color
from .graph import ConflictGraph


def _ceil_log2(n: int) -> int:
    """Smallest j with 2**j >= n, for n >= 1."""
    return (n - 1).bit_length()


class Schedule:
    """Common happy-set queries; subclasses implement happy(v, t)."""

    algorithm: str
    graph: ConflictGraph

    def happy(self, v: int, t: int) -> bool:
        raise NotImplementedError

    def happy_set(self, t: int) -> set[int]:
        return {v for v in self.graph.nodes() if self.happy(v, t)}

    def nodes(self) -> list[int]:
        return self.graph.nodes()


class PhasedSchedule(Schedule):
    """Frozen replay of the phased greedy recoloring up to a horizon."""

    algorithm = "phased"

    def __init__(self, graph: ConflictGraph, horizon: int, happy_sets: list[frozenset[int]]):
        self.graph = graph
        self.horizon = horizon
        self._happy_sets = happy_sets

    def happy(self, v: int, t: int) -> bool:
        if not 1 <= t <= self.horizon:
            raise ValueError(f"holiday {t} outside replay horizon 1..{self.horizon}")
        return v in self._happy_sets[t - 1]

    def happy_set(self, t: int) -> set[int]:
        if not 1 <= t <= self.horizon:
            raise ValueError(f"holiday {t} outside replay horizon 1..{self.horizon}")
        return set(self._happy_sets[t - 1])


class EliasSchedule(Schedule):
    """Perfectly periodic schedule driven by omega codewords of the colors.

    Node v is happy iff the low bits of t spell its color's codeword in
    reverse, i.e. t = residue (mod 2**rho(color)). Prefix-freeness of the
    code means at most one color can match any holiday, so happy sets are
    single color classes and independence follows from properness.
    """

    algorithm = "elias"

    def __init__(self, graph: ConflictGraph, coloring: dict[int, int]):
        if not is_proper(graph, coloring):
            raise ValueError("coloring must be proper and cover every node")
        self.graph = graph
        self.coloring = dict(coloring)
        self._slots: dict[int, tuple[int, int]] = {}
        for v, c in self.coloring.items():
            code = codec.omega_encode(c)
            self._slots[v] = (codec.code_residue(code), 1 << len(code))

    def happy(self, v: int, t: int) -> bool:
        residue, modulus = self._slots[v]
        return t % modulus == residue

    def period(self, v: int) -> int:
        return self._slots[v][1]

    def color(self, v: int) -> int:
        return self.coloring[v]


@dataclass(frozen=True)
class Slot:
    """Happy exactly when t = offset (mod 2**level)."""

    offset: int
    level: int

    @property
    def period(self) -> int:
        return 1 << self.level


class SlotSchedule(Schedule):
    """Degree-bound periodic schedule from per-node (offset, level) slots."""

    algorithm = "slots"

    def __init__(self, graph: ConflictGraph, slots: dict[int, Slot]):
        self.graph = graph
        self.slots = slots

    def happy(self, v: int, t: int) -> bool:
        slot = self.slots[v]
        return t % slot.period == slot.offset

    def period(self, v: int) -> int:
        return self.slots[v].period


def phased_greedy(g: ConflictGraph, init: dict[int, int], horizon: int) -> PhasedSchedule:
    """Replay the phased greedy recoloring for holidays 1..horizon.

    On holiday i the nodes whose current color is i are happy; each is
    immediately recolored to the smallest s in (i, i + degree + 1] unused
    by its neighbors, so consecutive happy holidays of a node are at most
    degree + 1 apart. The happy nodes of one phase form an independent
    set, so their recolorings never interact and the phase is well defined
    even though they all read the colors present at the start of the phase.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if not is_proper(g, init):
        raise ValueError("initial coloring must be proper and cover every node")
    if any(c < 1 for c in init.values()):
        raise ValueError("colors are positive integers")

    col = dict(init)
    happy_sets: list[frozenset[int]] = []
    for i in range(1, horizon + 1):
        happy = sorted(v for v in g.nodes() if col[v] == i)
        # Reading live colors equals reading the phase-start snapshot: no two
        # happy nodes are adjacent, so no recoloring is visible to another.
        for v in happy:
            taken = {col[u] for u in g.neighbors(v)}
            s = i + 1
            while s in taken:
                s += 1
            if s > i + g.degree(v) + 1:
                raise AssertionError("greedy recolor escaped its pigeonhole window")
            col[v] = s
        happy_sets.append(frozenset(happy))
    return PhasedSchedule(g.copy(), horizon, happy_sets)


def elias_schedule(g: ConflictGraph, coloring: dict[int, int]) -> EliasSchedule:
    """Perfectly periodic schedule from any proper coloring."""
    return EliasSchedule(g.copy(), coloring)


def degree_slots_sequential(g: ConflictGraph) -> SlotSchedule:
    """Assign slots greedily in decreasing degree order (ties: ascending id).

    Node v takes level j = ceil(log2(degree + 1)) and the smallest offset
    in [0, 2**j - 1] that no already-assigned neighbor occupies modulo
    2**j. The range always holds a free offset: v has at most degree
    assigned neighbors and 2**j >= degree + 1.
    """
    slots: dict[int, Slot] = {}
    for v in sorted(g.nodes(), key=lambda v: (-g.degree(v), v)):
        j = _ceil_log2(g.degree(v) + 1)
        modulus = 1 << j
        blocked = {slots[u].offset % modulus for u in g.neighbors(v) if u in slots}
        for x in range(modulus):
            if x not in blocked:
                slots[v] = Slot(offset=x, level=j)
                break
        else:
            raise AssertionError(f"no free offset for node {v}; assignment order is broken")
    return SlotSchedule(g.copy(), slots)


def degree_slots_distributed(g: ConflictGraph, seed: int = 0) -> tuple[SlotSchedule, RoundLog]:
    """Distributed slot assignment: one randomized coloring phase per level.

    Levels run from ceil(log2(max_degree + 1)) down to 0; in phase j the
    nodes with that level pick offsets in [0, 2**j - 1] via the randomized
    colorer, with palettes restricted to offsets that avoid, modulo 2**j,
    everything already picked by higher-level neighbors. The palette
    colorer speaks positive integers, so offsets are shifted by one on the
    way in and out.
    """
    slots: dict[int, Slot] = {}
    log = RoundLog()
    if len(g) == 0:
        return SlotSchedule(g.copy(), slots), log
    levels: dict[int, list[int]] = {}
    for v in g.nodes():
        levels.setdefault(_ceil_log2(g.degree(v) + 1), []).append(v)
    for j in range(max(levels), -1, -1):
        members = levels.get(j)
        if not members:
            continue
        modulus = 1 << j
        palettes = {}
        for v in members:
            blocked = {slots[u].offset % modulus for u in g.neighbors(v) if u in slots}
            palettes[v] = [x + 1 for x in range(modulus) if x not in blocked]
        phase_colors, phase_log = local_random_color(g, palettes, seed=seed)
        log.merge(phase_log)
        for v, c in phase_colors.items():
            slots[v] = Slot(offset=c - 1, level=j)
    return SlotSchedule(g.copy(), slots), log


def slot_conflicts(schedule: SlotSchedule) -> list[tuple[int, int]]:
    """Edges whose endpoints would ever host together (empty for a valid assignment)."""
    bad = []
    for u, v in schedule.graph.edges():
        su, sv = schedule.slots[u], schedule.slots[v]
        m = 1 << min(su.level, sv.level)
        if su.offset % m == sv.offset % m:
            bad.append((u, v))
    return bad


def dynamic_insert(s: EliasSchedule, u: int, v: int) -> EliasSchedule:
    """New conflict edge (u, v); recolor the higher endpoint if colors collide.

    Unknown endpoints are created and greedily colored first (ascending id),
    which never clashes. If two previously colored endpoints collide, the
    higher id moves to the smallest color its neighbors leave free; its
    palette grew along with its degree, so the new color is still at most
    degree + 1.
    """
    g = s.graph.copy()
    g.insert_edge(u, v)
    coloring = dict(s.coloring)
    for w in sorted({u, v}):
        if w not in coloring:
            coloring[w] = smallest_free_color(g, coloring, w)
    if coloring[u] == coloring[v]:
        loser = max(u, v)
        coloring[loser] = smallest_free_color(g, coloring, loser)
    return EliasSchedule(g, coloring)


def dynamic_remove(s: EliasSchedule, u: int, v: int, recolor_threshold: float = 2.0) -> EliasSchedule:
    """Drop edge (u, v); recolor endpoints whose color outgrew their degree.

    An endpoint is re-greedy-colored when its color exceeds
    recolor_threshold * (degree + 1), i.e. when its hosting rate has become
    disproportionate to its shrunken neighborhood. The default factor 2 is
    a tunable slack: recoloring costs the neighbors nothing but churns the
    node's own period, so mild oversize is tolerated.
    """
    g = s.graph.copy()
    g.remove_edge(u, v)
    coloring = dict(s.coloring)
    for w in sorted((u, v)):
        if coloring[w] > recolor_threshold * (g.degree(w) + 1):
            coloring[w] = smallest_free_color(g, coloring, w)
    return EliasSchedule(g, coloring)
