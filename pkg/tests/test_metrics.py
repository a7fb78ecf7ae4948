"""Centralized optimum and the empirical price-of-anarchy measurements."""

from fractions import Fraction

import pytest

from spgames import (BudgetExceededError, ExplicitSystem, GeneratorSpec,
                     Instance, Item, RationalInterval, compute_opt,
                     empirical_collusion_poa, empirical_poa,
                     empirical_sequential_poa, ex_asym, ex_seq, ex_sym,
                     ex_trivial, generate, greedy_sequential_outcome,
                     ratio_within_sequential_bound, reference_profiles,
                     welfare)

from oracles import brute_opt


class TestComputeOpt:
    def test_two_item_game(self):
        profile, value = compute_opt(ex_trivial())
        assert value == 2
        assert [sorted(s) for s in profile.sets] == [["1"], ["2"]]

    def test_asymmetric_machines_pack_everything(self):
        _, value = compute_opt(ex_asym(3, 2))
        assert value == 5

    def test_no_items(self):
        game = Instance(items=(),
                        players=(ExplicitSystem(maximal_sets=(frozenset(),)),))
        profile, value = compute_opt(game)
        assert value == 0 and profile.all_items() == frozenset()

    def test_matches_brute_force_on_corpus(self, corpus):
        for game in corpus[::10]:
            assert compute_opt(game) == brute_opt(game)

    def test_available_restriction(self):
        game = ex_trivial()
        _, value = compute_opt(game, available={"2"})
        assert value == 1

    def test_budget_error(self):
        with pytest.raises(BudgetExceededError):
            compute_opt(ex_asym(3, 2), budget=3)


class TestEmpiricalPoa:
    def test_two_item_game_ratio_two(self):
        result = empirical_poa(ex_trivial(), 1)
        assert result.ratio == 2
        assert result.bound == 2 and result.bound_satisfied
        assert welfare(ex_trivial(), result.worst_profile) == 1

    def test_asymmetric_bound_attained(self):
        result = empirical_poa(ex_asym(3, 2), Fraction(3, 2))
        assert result.ratio == Fraction(5, 2)
        assert result.bound == Fraction(5, 2) and result.bound_satisfied

    def test_symmetric_ratio_thirteen_sixths(self):
        result = empirical_poa(ex_sym(3, 2, 3), Fraction(3, 2))
        assert result.ratio == Fraction(13, 6)
        assert result.bound_satisfied


class TestSequentialPoa:
    def test_two_item_game_over_both_orders(self):
        result = empirical_sequential_poa(ex_trivial(), 1)
        assert result.ratio == 2
        assert result.orders_examined == 2
        assert result.bound == 2 and result.bound_satisfied

    def test_single_player_ratio_one(self):
        game = Instance(items=(Item("a", 4),),
                        players=(ExplicitSystem(maximal_sets=(frozenset({"a"}),)),))
        result = empirical_sequential_poa(game, 1)
        assert result.ratio == 1 and result.orders_examined == 1

    def test_deadline_grid_greedy_ratio_below_certified_bound(self):
        game = ex_seq(3)
        outcome = greedy_sequential_outcome(game, range(3), 1, "deadline")
        opt = welfare(game, reference_profiles(
            GeneratorSpec.make("ex_seq", n=3))["opt"])
        ratio = opt / welfare(game, outcome)
        assert (opt, ratio) == (9, Fraction(9, 7))
        assert ratio_within_sequential_bound(ratio, 1)

    def test_symmetric_instances_report_interval_bound(self):
        game = generate(GeneratorSpec.make("random_symmetric",
                                           n=2, copies=1, seed=5))
        result = empirical_sequential_poa(game, 1)
        assert isinstance(result.bound, RationalInterval)
        assert result.bound_satisfied


class TestCollusionPoa:
    def test_constructed_instance_hits_three_halves(self):
        game = generate(GeneratorSpec.make("ex_collusion", n=3, k=2,
                                           alpha=Fraction(1)))
        result = empirical_collusion_poa(game, 2, 1)
        assert result.ratio == Fraction(3, 2)
        assert result.bound == Fraction(3, 2) and result.bound_satisfied

    def test_two_item_game_pairs_restore_optimum(self):
        result = empirical_collusion_poa(ex_trivial(), 2, 1)
        assert result.ratio == 1

    def test_k_one_reduces_to_plain_poa(self, corpus):
        for game in corpus[::60]:
            plain = empirical_poa(game, 1)
            reduced = empirical_collusion_poa(game, 1, 1)
            assert plain.ratio == reduced.ratio
            assert plain.worst_profile == reduced.worst_profile

    def test_full_coalition_at_alpha_one_recovers_optimum(self, corpus):
        for game in corpus[::60]:
            if game.n < 2:
                continue
            result = empirical_collusion_poa(game, game.n, 1)
            assert result.ratio == 1
            assert result.worst_equilibrium_welfare == result.opt_welfare

    def test_single_player_reports_ratio_only(self):
        game = Instance(items=(Item("a", 4),),
                        players=(ExplicitSystem(maximal_sets=(frozenset({"a"}),)),))
        result = empirical_collusion_poa(game, 1, 1)
        assert result.ratio == 1 and result.bound is None
