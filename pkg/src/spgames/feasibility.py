"""Downward-closed strategy spaces over an item ground set.

A feasibility system answers one question: is a given set of items an
allowed selection for a player?  Two representations are supported:

* explicit families, stored as their maximal sets (an antichain), where
  membership is a subset test, and
* machine-scheduling oracles, where a set of jobs is allowed exactly when
  it can be scheduled inside the jobs' time windows on the player's
  machine(s).

Both representations are downward closed: removing items from an allowed
set keeps it allowed.  Scheduling oracles with release dates fall back to
a budget-guarded exact search; all-zero release dates are decided by the
deadline-prefix check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .budget import SearchBudget
from .errors import InputError


def _fraction(value, *, name: str, minimum: Fraction | None = None,
              strict: bool = False) -> Fraction:
    try:
        out = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"{name} is not a rational: {value!r}") from exc
    if minimum is not None:
        if strict and out <= minimum:
            raise InputError(f"{name} must be > {minimum}, got {out}")
        if not strict and out < minimum:
            raise InputError(f"{name} must be >= {minimum}, got {out}")
    return out


@dataclass(frozen=True)
class JobWindow:
    """Time window and duration of one job on one machine kind.

    `release + processing <= deadline` is not required; a job whose window
    cannot hold its processing time is simply never schedulable.
    """

    release: Fraction
    processing: Fraction
    deadline: Fraction

    def __post_init__(self):
        object.__setattr__(self, "release",
                           _fraction(self.release, name="release", minimum=Fraction(0)))
        object.__setattr__(self, "processing",
                           _fraction(self.processing, name="processing",
                                     minimum=Fraction(0), strict=True))
        object.__setattr__(self, "deadline", _fraction(self.deadline, name="deadline"))


@dataclass(frozen=True)
class TimeWindow:
    """Release/deadline pair for jobs whose duration depends on the machine."""

    release: Fraction
    deadline: Fraction

    def __post_init__(self):
        object.__setattr__(self, "release",
                           _fraction(self.release, name="release", minimum=Fraction(0)))
        object.__setattr__(self, "deadline", _fraction(self.deadline, name="deadline"))


@dataclass(frozen=True)
class ScheduleWitness:
    """A concrete schedule certifying membership of a job set.

    One entry per machine (or machine copy): an ordered sequence of
    (item id, start time) pairs.
    """

    machines: tuple[tuple[tuple[str, Fraction], ...], ...]

    def scheduled_items(self) -> frozenset[str]:
        return frozenset(item for seq in self.machines for item, _ in seq)


def _normalize_job_map(jobs) -> tuple[tuple[str, JobWindow], ...]:
    if isinstance(jobs, dict):
        pairs = jobs.items()
    else:
        pairs = jobs
    out = []
    for item_id, window in pairs:
        if not isinstance(window, JobWindow):
            window = JobWindow(**window) if isinstance(window, dict) else JobWindow(*window)
        out.append((str(item_id), window))
    out.sort(key=lambda p: p[0])
    ids = [p[0] for p in out]
    if len(set(ids)) != len(ids):
        raise InputError("duplicate job ids in feasibility descriptor")
    return tuple(out)


def _schedule_one_machine(jobs: list[tuple[str, JobWindow]],
                          budget: SearchBudget) -> Optional[list[tuple[str, Fraction]]]:
    """Exact single-machine schedule for the given jobs, or None.

    Zero release dates: order by deadline and check every prefix load.
    General release dates: dynamic program over job subsets minimizing the
    completion time, which is exact because starting earlier never hurts.
    """
    if not jobs:
        return []
    if all(window.release == 0 for _, window in jobs):
        ordered = sorted(jobs, key=lambda p: (p[1].deadline, p[0]))
        schedule = []
        clock = Fraction(0)
        for item_id, window in ordered:
            budget.spend()
            start = clock
            clock = start + window.processing
            if clock > window.deadline:
                return None
            schedule.append((item_id, start))
        return schedule

    indexed = sorted(jobs, key=lambda p: p[0])
    n = len(indexed)
    if n > 24:
        budget.require(1 << n)  # subset DP is hopeless here; fail loudly
    finish: dict[int, Fraction] = {0: Fraction(0)}
    parent: dict[int, tuple[int, int]] = {}
    for mask in range(1, 1 << n):
        budget.spend()
        best = None
        choice = None
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            prev = finish.get(mask ^ bit)
            if prev is None:
                continue
            window = indexed[j][1]
            start = max(prev, window.release)
            end = start + window.processing
            if end > window.deadline:
                continue
            if best is None or end < best:
                best = end
                choice = j
        if best is not None:
            finish[mask] = best
            parent[mask] = (mask ^ (1 << choice), choice)
    full = (1 << n) - 1
    if full not in finish:
        return None
    order: list[int] = []
    mask = full
    while mask:
        mask, j = parent[mask]
        order.append(j)
    order.reverse()
    schedule = []
    clock = Fraction(0)
    for j in order:
        item_id, window = indexed[j]
        start = max(clock, window.release)
        clock = start + window.processing
        schedule.append((item_id, start))
    return schedule


def _partition_into_parts(item_ids: list[str], max_parts: int, part_ok,
                          budget: SearchBudget) -> Optional[list[list[str]]]:
    """Split items into at most `max_parts` groups, each accepted by `part_ok`.

    Items are placed in id order; a new group may only be opened as group
    `len(used)+1` (symmetry breaking for interchangeable parts).  Pruning on
    a rejected partial group is sound because every `part_ok` family used
    here is downward closed.
    """
    parts: list[list[str]] = []

    def place(index: int) -> bool:
        if index == len(item_ids):
            return True
        item = item_ids[index]
        limit = min(len(parts) + 1, max_parts)
        for p in range(limit):
            budget.spend()
            opened = p == len(parts)
            if opened:
                parts.append([])
            parts[p].append(item)
            if part_ok(parts[p]) and place(index + 1):
                return True
            parts[p].pop()
            if opened:
                parts.pop()
        return False

    if place(0):
        return parts
    return None


class FeasibilitySystem:
    """Base interface: a downward-closed family of item sets."""

    def universe(self) -> frozenset[str]:
        raise NotImplementedError

    def is_member(self, items: Iterable[str],
                  budget: int | SearchBudget | None = None) -> bool:
        """True when `items` is an allowed selection.

        Ids outside the system's universe make the answer False rather than
        an error, so systems defined over sub-universes compose.
        """
        raise NotImplementedError

    def schedule_witness(self, items: Iterable[str],
                         budget: int | SearchBudget | None = None
                         ) -> Optional[ScheduleWitness]:
        """A concrete schedule for `items`, or None.

        None means either the set is not a member or the system has no
        schedule semantics (explicit families).
        """
        return None

    def job_deadlines(self) -> Optional[dict[str, Fraction]]:
        """Deadline per item for scheduling systems, None otherwise."""
        return None


@dataclass(frozen=True)
class ExplicitSystem(FeasibilitySystem):
    """A family given by its maximal sets; membership is a subset test.

    The representation is expected to be an antichain (no maximal set
    contains another) but this is checked by `validate_downward_closed`,
    not enforced at construction.
    """

    maximal_sets: tuple[frozenset[str], ...]

    def __post_init__(self):
        sets = tuple(sorted({frozenset(str(i) for i in s) for s in self.maximal_sets},
                            key=lambda s: tuple(sorted(s))))
        if not sets:
            sets = (frozenset(),)
        object.__setattr__(self, "maximal_sets", sets)

    def universe(self) -> frozenset[str]:
        out: set[str] = set()
        for s in self.maximal_sets:
            out |= s
        return frozenset(out)

    def is_member(self, items, budget=None) -> bool:
        target = frozenset(items)
        return any(target <= maximal for maximal in self.maximal_sets)


@dataclass(frozen=True)
class SingleMachineSystem(FeasibilitySystem):
    """Jobs allowed together exactly when one machine can schedule them all."""

    jobs: tuple[tuple[str, JobWindow], ...]

    def __post_init__(self):
        object.__setattr__(self, "jobs", _normalize_job_map(self.jobs))

    @cached_property
    def job_map(self) -> dict[str, JobWindow]:
        return dict(self.jobs)

    def universe(self) -> frozenset[str]:
        return frozenset(self.job_map)

    def is_member(self, items, budget=None) -> bool:
        return self.schedule_witness(items, budget) is not None

    def schedule_witness(self, items, budget=None) -> Optional[ScheduleWitness]:
        target = frozenset(items)
        if not target <= self.universe():
            return None
        chosen = [(i, self.job_map[i]) for i in sorted(target)]
        schedule = _schedule_one_machine(chosen, SearchBudget.ensure(budget))
        if schedule is None:
            return None
        return ScheduleWitness(machines=(tuple(schedule),))

    def job_deadlines(self) -> dict[str, Fraction]:
        return {i: w.deadline for i, w in self.jobs}


@dataclass(frozen=True)
class IdenticalMachinesSystem(FeasibilitySystem):
    """Jobs allowed when they split across `copies` identical machines."""

    copies: int
    jobs: tuple[tuple[str, JobWindow], ...]

    def __post_init__(self):
        if int(self.copies) < 1:
            raise InputError("machine copies must be >= 1")
        object.__setattr__(self, "copies", int(self.copies))
        object.__setattr__(self, "jobs", _normalize_job_map(self.jobs))

    @cached_property
    def job_map(self) -> dict[str, JobWindow]:
        return dict(self.jobs)

    def universe(self) -> frozenset[str]:
        return frozenset(self.job_map)

    def is_member(self, items, budget=None) -> bool:
        return self.schedule_witness(items, budget) is not None

    def schedule_witness(self, items, budget=None) -> Optional[ScheduleWitness]:
        target = frozenset(items)
        if not target <= self.universe():
            return None
        shared = SearchBudget.ensure(budget)
        if self.copies == 1:
            chosen = [(i, self.job_map[i]) for i in sorted(target)]
            schedule = _schedule_one_machine(chosen, shared)
            if schedule is None:
                return None
            return ScheduleWitness(machines=(tuple(schedule),))

        def part_ok(part: list[str]) -> bool:
            chosen = [(i, self.job_map[i]) for i in part]
            return _schedule_one_machine(chosen, shared) is not None

        parts = _partition_into_parts(sorted(target), self.copies, part_ok, shared)
        if parts is None:
            return None
        machines = []
        for part in parts:
            chosen = [(i, self.job_map[i]) for i in part]
            machines.append(tuple(_schedule_one_machine(chosen, shared)))
        while len(machines) < self.copies:
            machines.append(())
        return ScheduleWitness(machines=tuple(machines))

    def job_deadlines(self) -> dict[str, Fraction]:
        return {i: w.deadline for i, w in self.jobs}


@dataclass(frozen=True)
class UnrelatedMachinesSystem(FeasibilitySystem):
    """Named machines with per-machine processing times.

    `processing[(machine, item)]` may be missing, meaning the item cannot
    run on that machine at all.
    """

    machines: tuple[str, ...]
    processing: tuple[tuple[tuple[str, str], Fraction], ...]
    jobs: tuple[tuple[str, TimeWindow], ...]

    def __post_init__(self):
        machines = tuple(str(m) for m in self.machines)
        if len(set(machines)) != len(machines) or not machines:
            raise InputError("machine names must be nonempty and unique")
        object.__setattr__(self, "machines", machines)

        if isinstance(self.processing, dict):
            pairs = self.processing.items()
        else:
            pairs = self.processing
        norm = []
        for key, value in pairs:
            machine, item = key
            norm.append(((str(machine), str(item)),
                         _fraction(value, name="processing",
                                   minimum=Fraction(0), strict=True)))
        norm.sort(key=lambda p: p[0])
        object.__setattr__(self, "processing", tuple(norm))

        if isinstance(self.jobs, dict):
            job_pairs = self.jobs.items()
        else:
            job_pairs = self.jobs
        jobs = []
        for item_id, window in job_pairs:
            if not isinstance(window, TimeWindow):
                window = TimeWindow(**window) if isinstance(window, dict) else TimeWindow(*window)
            jobs.append((str(item_id), window))
        jobs.sort(key=lambda p: p[0])
        if len({i for i, _ in jobs}) != len(jobs):
            raise InputError("duplicate job ids in feasibility descriptor")
        object.__setattr__(self, "jobs", tuple(jobs))

        for (machine, item), _ in self.processing:
            if machine not in machines:
                raise InputError(f"processing entry for unknown machine {machine!r}")
            if item not in {i for i, _ in jobs}:
                raise InputError(f"processing entry for unknown job {item!r}")

    @cached_property
    def processing_map(self) -> dict[tuple[str, str], Fraction]:
        return dict(self.processing)

    @cached_property
    def job_map(self) -> dict[str, TimeWindow]:
        return dict(self.jobs)

    def universe(self) -> frozenset[str]:
        return frozenset(self.job_map)

    def _machine_window(self, machine: str, item: str) -> Optional[JobWindow]:
        duration = self.processing_map.get((machine, item))
        if duration is None:
            return None
        window = self.job_map[item]
        return JobWindow(release=window.release, processing=duration,
                         deadline=window.deadline)

    def is_member(self, items, budget=None) -> bool:
        return self.schedule_witness(items, budget) is not None

    def schedule_witness(self, items, budget=None) -> Optional[ScheduleWitness]:
        target = frozenset(items)
        if not target <= self.universe():
            return None
        shared = SearchBudget.ensure(budget)
        ordered = sorted(target)
        assignment: dict[str, list[str]] = {m: [] for m in self.machines}

        def machine_ok(machine: str) -> bool:
            chosen = []
            for item in assignment[machine]:
                window = self._machine_window(machine, item)
                if window is None:
                    return False
                chosen.append((item, window))
            return _schedule_one_machine(chosen, shared) is not None

        def place(index: int) -> bool:
            if index == len(ordered):
                return True
            item = ordered[index]
            for machine in self.machines:
                shared.spend()
                if (machine, item) not in self.processing_map:
                    continue
                assignment[machine].append(item)
                if machine_ok(machine) and place(index + 1):
                    return True
                assignment[machine].pop()
            return False

        if not place(0):
            return None
        machines = []
        for machine in self.machines:
            chosen = [(i, self._machine_window(machine, i)) for i in assignment[machine]]
            machines.append(tuple(_schedule_one_machine(chosen, shared)))
        return ScheduleWitness(machines=tuple(machines))

    def job_deadlines(self) -> dict[str, Fraction]:
        return {i: w.deadline for i, w in self.jobs}


@dataclass(frozen=True)
class SharedSymmetricSystem(FeasibilitySystem):
    """A player holding `copies` instances of one shared base system.

    A set is allowed when it splits into at most `copies` disjoint members
    of the base family (one per machine copy, in scheduling terms).
    """

    base: FeasibilitySystem
    copies: int

    def __post_init__(self):
        if int(self.copies) < 1:
            raise InputError("copies must be >= 1")
        object.__setattr__(self, "copies", int(self.copies))
        if isinstance(self.base, SharedSymmetricSystem):
            raise InputError("shared symmetric systems cannot nest")

    def universe(self) -> frozenset[str]:
        return self.base.universe()

    def is_member(self, items, budget=None) -> bool:
        target = frozenset(items)
        if not target <= self.universe():
            return False
        if self.copies == 1:
            return self.base.is_member(target, budget)
        shared = SearchBudget.ensure(budget)
        parts = _partition_into_parts(
            sorted(target), self.copies,
            lambda part: self.base.is_member(part, shared), shared)
        return parts is not None

    def schedule_witness(self, items, budget=None) -> Optional[ScheduleWitness]:
        target = frozenset(items)
        if not target <= self.universe():
            return None
        shared = SearchBudget.ensure(budget)
        if self.copies == 1:
            return self.base.schedule_witness(target, shared)
        parts = _partition_into_parts(
            sorted(target), self.copies,
            lambda part: self.base.is_member(part, shared), shared)
        if parts is None:
            return None
        machines = []
        for part in parts:
            part_witness = self.base.schedule_witness(part, shared)
            if part_witness is None:
                return None  # base has no schedule semantics
            machines.extend(part_witness.machines)
        while len(machines) < self.copies:
            machines.append(())
        return ScheduleWitness(machines=tuple(machines))

    def job_deadlines(self) -> Optional[dict[str, Fraction]]:
        return self.base.job_deadlines()


def antichain_violation(maximal_sets: Iterable[frozenset[str]]
                        ) -> Optional[tuple[frozenset[str], frozenset[str]]]:
    """A pair (smaller, larger) with smaller <= larger, or None."""
    sets = sorted({frozenset(s) for s in maximal_sets}, key=len)
    for i, small in enumerate(sets):
        for large in sets[i + 1:]:
            if small <= large and small != large:
                return (small, large)
    return None


def _random_feasible_set(system: FeasibilitySystem, rng: random.Random,
                         budget: SearchBudget) -> set[str]:
    chosen: set[str] = set()
    pool = sorted(system.universe())
    rng.shuffle(pool)
    for item in pool:
        if rng.random() < 0.4:
            continue
        if system.is_member(chosen | {item}, budget):
            chosen.add(item)
    return chosen


def validate_downward_closed(system: FeasibilitySystem, samples: int = 100,
                             seed: int = 0,
                             budget: int | SearchBudget | None = None) -> bool:
    """Check the downward-closure contract of a system.

    Explicit families (also as the base of a shared symmetric system) get
    an exact antichain check of their representation.  Scheduling oracles
    get a randomized spot check: draw feasible sets and strip elements one
    by one, asserting membership persists all the way down to the empty
    set.
    """
    shared = SearchBudget.ensure(budget)
    target = system.base if isinstance(system, SharedSymmetricSystem) else system
    if isinstance(target, ExplicitSystem):
        return antichain_violation(target.maximal_sets) is None

    rng = random.Random(seed)
    for _ in range(samples):
        current = _random_feasible_set(system, rng, shared)
        while current:
            current.remove(rng.choice(sorted(current)))
            if not system.is_member(current, shared):
                return False
    return True


def feasible_subsets(system: FeasibilitySystem, pool: Iterable[str],
                     budget: int | SearchBudget | None = None
                     ) -> tuple[frozenset[str], ...]:
    """All members of the system contained in `pool`, in lexicographic order.

    The enumeration extends only feasible prefixes, which is exhaustive
    because the family is downward closed.
    """
    shared = SearchBudget.ensure(budget)
    ordered = sorted(frozenset(pool) & system.universe())
    out: list[frozenset[str]] = []

    def extend(current: tuple[str, ...], start: int) -> None:
        out.append(frozenset(current))
        for idx in range(start, len(ordered)):
            shared.spend()
            candidate = current + (ordered[idx],)
            if system.is_member(frozenset(candidate), shared):
                extend(candidate, idx + 1)

    extend((), 0)
    return tuple(out)


def _uniform_unit_machine(system: FeasibilitySystem) -> bool:
    """True for zero-release, equal-processing machine systems.

    For these, any maximal feasible subset of a pool is also maximum (jobs
    match to fixed time slots, a transversal structure), so a greedy scan
    already yields the maximum cardinality.
    """
    if isinstance(system, SharedSymmetricSystem):
        return _uniform_unit_machine(system.base)
    if isinstance(system, (SingleMachineSystem, IdenticalMachinesSystem)):
        windows = [w for _, w in system.jobs]
        if not windows:
            return True
        return (all(w.release == 0 for w in windows)
                and len({w.processing for w in windows}) == 1)
    return False


def _zero_release_jobs(system: FeasibilitySystem) -> Optional[dict[str, JobWindow]]:
    base = system
    if isinstance(system, SharedSymmetricSystem) and system.copies == 1:
        base = system.base
    if isinstance(base, IdenticalMachinesSystem) and base.copies == 1:
        base = SingleMachineSystem(jobs=base.jobs)
    if isinstance(base, SingleMachineSystem) and all(
            w.release == 0 for _, w in base.jobs):
        return base.job_map
    return None


def _greedy_scan_zero_release(job_map: dict[str, JobWindow], ordered: list[str],
                              budget: SearchBudget) -> list[str]:
    """Greedy feasible scan with an O(log) insertion test per candidate.

    The kept jobs stay sorted by (deadline, id) with running finish times;
    inserting a candidate shifts every later job by its processing time,
    so it fits exactly when that shift is at most the smallest later
    slack (deadline minus finish).
    """
    import bisect

    keys: list[tuple[Fraction, str]] = []
    rows: list[tuple[str, Fraction]] = []  # (item, processing) in key order
    finishes: list[Fraction] = []
    suffix_slack: list[Fraction] = []
    accepted: list[str] = []

    def rebuild() -> None:
        clock = Fraction(0)
        finishes.clear()
        for _, processing in rows:
            clock += processing
            finishes.append(clock)
        suffix_slack.clear()
        slack = None
        for pos in range(len(rows) - 1, -1, -1):
            gap = keys[pos][0] - finishes[pos]
            slack = gap if slack is None else min(slack, gap)
            suffix_slack.append(slack)
        suffix_slack.reverse()

    for item in ordered:
        budget.spend()
        window = job_map[item]
        key = (window.deadline, item)
        pos = bisect.bisect_left(keys, key)
        before = finishes[pos - 1] if pos else Fraction(0)
        end = before + window.processing
        fits = end <= window.deadline
        if fits and pos < len(rows):
            fits = window.processing <= suffix_slack[pos]
        if fits:
            keys.insert(pos, key)
            rows.insert(pos, (item, window.processing))
            rebuild()
            accepted.append(item)
    return accepted


def _greedy_feasible_scan(system: FeasibilitySystem, ordered: list[str],
                          budget: SearchBudget) -> list[str]:
    fast = _zero_release_jobs(system)
    if fast is not None:
        return _greedy_scan_zero_release(fast, ordered, budget)
    chosen: list[str] = []
    for item in ordered:
        budget.spend()
        if system.is_member(frozenset(chosen) | {item}, budget):
            chosen.append(item)
    return chosen


def _max_cardinality_from(system: FeasibilitySystem, prefix: frozenset[str],
                          pool: list[str], budget: SearchBudget) -> int:
    """Largest feasible superset size of `prefix` using items from `pool`."""
    best = len(prefix)

    def extend(current: frozenset[str], start: int) -> None:
        nonlocal best
        best = max(best, len(current))
        for idx in range(start, len(pool)):
            budget.spend()
            if len(current) + (len(pool) - idx) <= best:
                break
            candidate = current | {pool[idx]}
            if system.is_member(candidate, budget):
                extend(candidate, idx + 1)

    extend(prefix, 0)
    return best


def max_cardinality_feasible(system: FeasibilitySystem, available: Iterable[str],
                             prefer_largest_deadline: bool = False,
                             budget: int | SearchBudget | None = None
                             ) -> tuple[str, ...]:
    """A maximum-cardinality feasible subset of `available`, in scan order.

    The scan order is decreasing deadline (ties by item id) when
    `prefer_largest_deadline` is set, plain item-id order otherwise.  Among
    all maximum-cardinality subsets, the returned one is the set picked by
    a greedy scan that keeps an item whenever the maximum remains
    reachable with it.
    """
    shared = SearchBudget.ensure(budget)
    pool = sorted(frozenset(available) & system.universe())
    if prefer_largest_deadline:
        deadlines = system.job_deadlines()
        if deadlines is None:
            raise InputError(
                "largest-deadline scan requires a scheduling system")
        pool.sort(key=lambda i: (-deadlines[i], i))
    if not pool:
        return ()

    greedy = _greedy_feasible_scan(system, pool, shared)
    if _uniform_unit_machine(system):
        return tuple(greedy)

    target = _max_cardinality_from(system, frozenset(), pool, shared)
    if len(greedy) == target:
        return tuple(greedy)

    chosen: list[str] = []
    rest = list(pool)
    for item in pool:
        rest.remove(item)
        candidate = frozenset(chosen) | {item}
        if not system.is_member(candidate, shared):
            continue
        if _max_cardinality_from(system, candidate, rest, shared) == target:
            chosen.append(item)
            if len(chosen) == target:
                break
    return tuple(chosen)


def validate_witness(system: FeasibilitySystem, items: Iterable[str],
                     witness: ScheduleWitness) -> bool:
    """Re-check a schedule witness against the system's raw parameters."""
    target = frozenset(items)
    if witness.scheduled_items() != target:
        return False

    def window_for(machine_index: int, item: str) -> Optional[JobWindow]:
        if isinstance(system, (SingleMachineSystem, IdenticalMachinesSystem)):
            return system.job_map.get(item)
        if isinstance(system, UnrelatedMachinesSystem):
            machine = system.machines[machine_index]
            return system._machine_window(machine, item)
        if isinstance(system, SharedSymmetricSystem):
            base = system.base
            if isinstance(base, SingleMachineSystem):
                return base.job_map.get(item)
        return None

    if isinstance(system, SingleMachineSystem) and len(witness.machines) != 1:
        return False
    if isinstance(system, IdenticalMachinesSystem) and len(witness.machines) > system.copies:
        return False
    if isinstance(system, SharedSymmetricSystem) and len(witness.machines) > system.copies:
        return False

    for machine_index, sequence in enumerate(witness.machines):
        clock = None
        for item, start in sequence:
            window = window_for(machine_index, item)
            if window is None:
                return False
            if start < window.release:
                return False
            end = start + window.processing
            if end > window.deadline:
                return False
            if clock is not None and start < clock:
                return False
            clock = end
    return True
