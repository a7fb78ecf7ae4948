"""Feasibility systems: membership, closure, witnesses, cardinality scans."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from spgames import (BudgetExceededError, ExplicitSystem,
                     IdenticalMachinesSystem, InputError, JobWindow,
                     SharedSymmetricSystem, SingleMachineSystem, TimeWindow,
                     UnrelatedMachinesSystem, antichain_violation, ex_asym,
                     ex_seq, feasible_subsets, max_cardinality_feasible,
                     validate_downward_closed, validate_witness)

from oracles import all_subsets, schedulable_by_permutations


def unit_jobs(spec: dict[str, tuple]) -> dict[str, JobWindow]:
    return {name: JobWindow(Fraction(r), Fraction(p), Fraction(d))
            for name, (r, p, d) in spec.items()}


class TestExplicit:
    def test_membership_is_subset_of_some_maximal(self):
        system = ExplicitSystem(maximal_sets=(frozenset({"a", "b"}), frozenset({"c"})))
        assert system.is_member({"a"})
        assert system.is_member({"a", "b"})
        assert system.is_member(set())
        assert not system.is_member({"a", "c"})
        assert not system.is_member({"zzz"})

    def test_antichain_accepted(self):
        system = ExplicitSystem(maximal_sets=(frozenset({"1"}), frozenset({"2"})))
        assert validate_downward_closed(system)

    def test_nested_sets_rejected(self):
        system = ExplicitSystem(maximal_sets=(frozenset({"1"}), frozenset({"1", "2"})))
        assert not validate_downward_closed(system)
        assert antichain_violation(system.maximal_sets) == (
            frozenset({"1"}), frozenset({"1", "2"}))


class TestSingleMachine:
    def test_fast_machine_fits_any_three_jobs(self):
        game = ex_asym(3, 2)
        machine = game.players[0]
        for combo in combinations(sorted(game.item_ids), 3):
            assert machine.is_member(frozenset(combo))
        for combo in combinations(sorted(game.item_ids), 4):
            assert not machine.is_member(frozenset(combo))

    def test_slow_machines_take_one_light_job_only(self):
        game = ex_asym(3, 2)
        machine = game.players[1]
        assert machine.is_member({"q01"})
        assert not machine.is_member({"q01", "q02"})
        assert not machine.is_member({"p01"})

    def test_empty_set_is_always_feasible(self):
        game = ex_asym(3, 2)
        for system in game.players:
            assert system.is_member(set())

    def test_release_dates_decided_exactly(self):
        jobs = unit_jobs({
            "a": (0, 2, 2),
            "b": (1, 1, 4),
            "c": (2, 1, 3),
        })
        system = SingleMachineSystem(jobs=jobs)
        # a must go first (its window is [0,2]); c must sit in [2,3].
        assert system.is_member({"a", "b", "c"})
        tight = SingleMachineSystem(jobs=unit_jobs({
            "a": (0, 2, 2), "b": (0, 1, 2)}))
        assert not tight.is_member({"a", "b"})

    def test_deadline_prefix_check_matches_order_enumeration(self):
        rng = random.Random(5)
        for round_no in range(120):
            count = rng.randint(1, 7)
            jobs = {}
            for index in range(count):
                processing = Fraction(rng.randint(1, 8), rng.randint(1, 4))
                deadline = Fraction(rng.randint(1, 24), rng.randint(1, 3))
                jobs[f"j{index}"] = JobWindow(Fraction(0), processing, deadline)
            system = SingleMachineSystem(jobs=jobs)
            raw = [(Fraction(0), w.processing, w.deadline) for w in jobs.values()]
            assert system.is_member(set(jobs)) == schedulable_by_permutations(raw)

    def test_release_search_matches_order_enumeration(self):
        rng = random.Random(17)
        for round_no in range(60):
            count = rng.randint(1, 6)
            jobs = {}
            for index in range(count):
                release = Fraction(rng.randint(0, 4))
                processing = Fraction(rng.randint(1, 5), rng.randint(1, 2))
                deadline = release + Fraction(rng.randint(0, 10), rng.randint(1, 2))
                jobs[f"j{index}"] = JobWindow(release, processing, deadline)
            system = SingleMachineSystem(jobs=jobs)
            raw = [(w.release, w.processing, w.deadline) for w in jobs.values()]
            assert system.is_member(set(jobs)) == schedulable_by_permutations(raw)


class TestMultiCopy:
    def base(self) -> SingleMachineSystem:
        return SingleMachineSystem(jobs=unit_jobs({
            "a": (0, 1, 1), "b": (0, 1, 1), "c": (0, 1, 2), "d": (0, 2, 2)}))

    def test_two_copies_split_conflicting_jobs(self):
        doubled = IdenticalMachinesSystem(copies=2, jobs=self.base().jobs)
        assert doubled.is_member({"a", "b"})
        assert not doubled.is_member({"a", "b", "d"})
        assert doubled.is_member({"a", "b", "c"})

    def test_single_copy_matches_base_exactly(self):
        base = self.base()
        shared = SharedSymmetricSystem(base=base, copies=1)
        for subset in all_subsets(base.universe()):
            assert shared.is_member(subset) == base.is_member(subset)

    def test_shared_explicit_base_partitions(self):
        base = ExplicitSystem(maximal_sets=(frozenset({"a", "b"}), frozenset({"c"})))
        shared = SharedSymmetricSystem(base=base, copies=2)
        assert shared.is_member({"a", "b", "c"})
        assert not shared.is_member({"a", "b", "c", "zzz"})
        single = SharedSymmetricSystem(base=base, copies=1)
        assert not single.is_member({"a", "c"})

    def test_downward_closure_sampled_on_oracles(self):
        base = self.base()
        assert validate_downward_closed(base, samples=200, seed=1)
        doubled = IdenticalMachinesSystem(copies=2, jobs=base.jobs)
        assert validate_downward_closed(doubled, samples=100, seed=2)

    def test_closure_property_random_removals(self):
        game = ex_asym(3, 2)
        rng = random.Random(9)
        for system in game.players:
            for _ in range(40):
                pool = sorted(game.item_ids)
                chosen: set[str] = set()
                rng.shuffle(pool)
                for item in pool:
                    if system.is_member(chosen | {item}):
                        chosen.add(item)
                while chosen:
                    chosen.discard(rng.choice(sorted(chosen)))
                    assert system.is_member(chosen)


class TestUnrelated:
    def test_job_runs_only_where_processing_defined(self):
        system = UnrelatedMachinesSystem(
            machines=("m1", "m2"),
            processing={("m1", "a"): Fraction(1), ("m2", "b"): Fraction(1)},
            jobs={"a": TimeWindow(Fraction(0), Fraction(1)),
                  "b": TimeWindow(Fraction(0), Fraction(1))})
        assert system.is_member({"a", "b"})
        only_m1 = UnrelatedMachinesSystem(
            machines=("m1",),
            processing={("m1", "a"): Fraction(1)},
            jobs={"a": TimeWindow(Fraction(0), Fraction(1)),
                  "b": TimeWindow(Fraction(0), Fraction(1))})
        assert not only_m1.is_member({"b"})


class TestWitness:
    def test_witness_revalidates_on_scheduling_systems(self):
        game = ex_asym(3, 2)
        for player, selection in ((0, {"p01", "q01", "q02"}), (1, {"q01"})):
            system = game.players[player]
            witness = system.schedule_witness(selection)
            assert witness is not None
            assert validate_witness(system, selection, witness)
            assert witness.scheduled_items() == frozenset(selection)

    def test_witness_intervals_disjoint_and_inside_windows(self):
        jobs = unit_jobs({"a": (0, 2, 2), "b": (1, 1, 4), "c": (2, 1, 3)})
        system = SingleMachineSystem(jobs=jobs)
        witness = system.schedule_witness({"a", "b", "c"})
        assert witness is not None
        (sequence,) = witness.machines
        clock = None
        for item, start in sequence:
            window = jobs[item]
            assert start >= window.release
            assert start + window.processing <= window.deadline
            if clock is not None:
                assert start >= clock
            clock = start + window.processing

    def test_no_witness_for_infeasible_set(self):
        game = ex_asym(3, 2)
        assert game.players[1].schedule_witness({"p01"}) is None

    def test_multi_copy_witness(self):
        base = SingleMachineSystem(jobs=unit_jobs({
            "a": (0, 1, 1), "b": (0, 1, 1)}))
        shared = SharedSymmetricSystem(base=base, copies=2)
        witness = shared.schedule_witness({"a", "b"})
        assert witness is not None
        assert validate_witness(shared, {"a", "b"}, witness)


class TestMaxCardinality:
    def test_largest_deadline_first_keeps_loose_jobs(self):
        game = ex_seq(5)
        system = game.players[0]
        scan = max_cardinality_feasible(system, game.item_ids,
                                        prefer_largest_deadline=True)
        assert len(scan) == 5
        assert all(item.startswith("d05") for item in scan)

    def test_after_removing_top_class_four_jobs_remain(self):
        game = ex_seq(5)
        system = game.players[1]
        rest = {i for i in game.item_ids if not i.startswith("d05")}
        scan = max_cardinality_feasible(system, rest,
                                        prefer_largest_deadline=True)
        assert len(scan) == 4
        assert all(item.startswith("d04") for item in scan)

    def test_matches_brute_force_cardinality(self):
        game = ex_seq(3)
        system = game.players[0]
        for available in (game.item_ids,
                          {i for i in game.item_ids if not i.startswith("d03")}):
            best = max(len(T) for T in all_subsets(available)
                       if system.is_member(T))
            scan = max_cardinality_feasible(system, available,
                                            prefer_largest_deadline=True)
            assert len(scan) == best

    def test_maximum_found_when_plain_greedy_would_stall(self):
        # The loose-deadline job blocks the machine entirely; the scan must
        # still deliver the true maximum of two jobs.
        jobs = unit_jobs({"a": (0, 10, 10), "b": (0, 4, 9), "c": (0, 4, 9)})
        system = SingleMachineSystem(jobs=jobs)
        scan = max_cardinality_feasible(system, {"a", "b", "c"},
                                        prefer_largest_deadline=True)
        assert set(scan) == {"b", "c"}

    def test_empty_pool(self):
        game = ex_seq(3)
        assert max_cardinality_feasible(game.players[0], frozenset()) == ()

    def test_deadline_scan_requires_scheduling_system(self):
        system = ExplicitSystem(maximal_sets=(frozenset({"a"}),))
        with pytest.raises(InputError):
            max_cardinality_feasible(system, {"a"}, prefer_largest_deadline=True)


class TestBudgets:
    def test_budget_exhaustion_raises_instead_of_lying(self):
        jobs = {f"j{i}": JobWindow(Fraction(i % 3), Fraction(1), Fraction(20))
                for i in range(12)}
        system = SingleMachineSystem(jobs=jobs)
        with pytest.raises(BudgetExceededError):
            system.is_member(set(jobs), budget=50)

    def test_feasible_subsets_budget(self):
        system = ExplicitSystem(maximal_sets=(frozenset({"a", "b", "c", "d"}),))
        with pytest.raises(BudgetExceededError):
            feasible_subsets(system, {"a", "b", "c", "d"}, budget=3)


class TestFeasibleSubsets:
    def test_enumerates_exactly_the_members(self):
        game = ex_asym(3, 2)
        for system in game.players:
            listed = set(feasible_subsets(system, game.item_ids))
            expected = {T for T in all_subsets(game.item_ids)
                        if system.is_member(T)}
            assert listed == expected

    def test_lexicographic_order(self):
        system = ExplicitSystem(maximal_sets=(frozenset({"a", "b"}),))
        listed = feasible_subsets(system, {"a", "b"})
        assert [tuple(sorted(T)) for T in listed] == [
            (), ("a",), ("a", "b"), ("b",)]
