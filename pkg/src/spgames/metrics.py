"""Centralized optimum and empirical price-of-anarchy measurements.

All ratios are exact rationals.  The worst equilibrium is found by
exhaustive, budget-gated enumeration: correctness of "worst" is the
point, so no heuristics are used.  The practical envelope for the
exhaustive operations is small instances (around n <= 4 and |J| <= 10).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional, Union

from .budget import SearchBudget
from .errors import InputError
from .best_response import check_alpha
from .bounds import (RationalInterval, bound_collusion, bound_nash,
                     bound_sequential_symmetric, ratio_within_sequential_bound)
from .equilibria import enumerate_nash, enumerate_spe_outcomes, verify_collusion
from .model import Instance, Profile, restrict_available, welfare

Bound = Union[Fraction, RationalInterval, None]


@dataclass(frozen=True)
class PoAResult:
    """An empirical price-of-anarchy measurement against its bound.

    `ratio` is exactly `opt_welfare / worst_equilibrium_welfare` (defined
    as 1 when both are zero, which only happens together).
    `bound_satisfied` is decided in exact rational arithmetic, or by a
    certified enclosure when the bound involves exp(1/alpha).
    """

    concept: str
    alpha: Fraction
    opt_welfare: Fraction
    worst_equilibrium_welfare: Fraction
    ratio: Fraction
    bound: Bound
    bound_satisfied: bool
    worst_profile: Profile
    opt_profile: Profile
    k: Optional[int] = None
    orders_examined: Optional[int] = None


def compute_opt(instance: Instance,
                budget: int | SearchBudget | None = None,
                available: Iterable[str] | None = None
                ) -> tuple[Profile, Fraction]:
    """Maximum-welfare valid profile by branch and bound.

    Items are assigned in id order to a player or to nobody; the upper
    bound at a node is the weight of the items not yet decided.  Ties are
    broken by the lexicographically smallest assignment vector (players
    in index order before "nobody"), which the search visits first.
    `available` restricts the assignable items (the full ground set by
    default).
    """
    shared = SearchBudget.ensure(budget)
    if available is None:
        pool = list(instance.ordered_ids)
    else:
        pool = sorted(restrict_available(instance, available))
    n = instance.n
    weights = instance.weights

    suffix = [Fraction(0)] * (len(pool) + 1)
    for idx in range(len(pool) - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] + weights[pool[idx]]

    feasible_cache: list[dict[frozenset[str], bool]] = [
        {frozenset(): True} for _ in range(n)]

    def feasible(player: int, candidate: frozenset[str]) -> bool:
        cache = feasible_cache[player]
        hit = cache.get(candidate)
        if hit is None:
            hit = instance.players[player].is_member(candidate, shared)
            cache[candidate] = hit
        return hit

    sets: list[frozenset[str]] = [frozenset() for _ in range(n)]
    best_value: Fraction | None = None
    best_sets: tuple[frozenset[str], ...] = tuple(sets)

    def walk(idx: int, value: Fraction) -> None:
        nonlocal best_value, best_sets
        if best_value is not None and value + suffix[idx] <= best_value:
            return  # equal-value completions here would be lex-later
        if idx == len(pool):
            best_value, best_sets = value, tuple(sets)
            return
        item = pool[idx]
        for player in range(n):
            shared.spend()
            candidate = sets[player] | {item}
            if feasible(player, candidate):
                sets[player] = candidate
                walk(idx + 1, value + weights[item])
                sets[player] = candidate - {item}
        shared.spend()
        walk(idx + 1, value)

    walk(0, Fraction(0))
    assert best_value is not None
    return Profile(best_sets), best_value


def _ratio(opt_value: Fraction, worst_value: Fraction) -> Fraction:
    if worst_value == 0:
        # A zero-welfare equilibrium forces a zero-welfare optimum:
        # otherwise some player could still grab a positive-weight item.
        if opt_value != 0:
            raise RuntimeError(
                "zero-welfare equilibrium with positive optimum; "
                "equilibrium verification is inconsistent")
        return Fraction(1)
    return opt_value / worst_value


def _worst(instance: Instance, profiles: Iterable[Profile]
           ) -> tuple[Profile, Fraction]:
    worst_profile: Profile | None = None
    worst_value: Fraction | None = None
    for profile in profiles:
        value = welfare(instance, profile)
        if worst_value is None or value < worst_value:
            worst_profile, worst_value = profile, value
    if worst_profile is None:
        raise RuntimeError("no equilibrium found; the optimum always is one")
    return worst_profile, worst_value


def empirical_poa(instance: Instance, alpha,
                  budget: int | SearchBudget | None = None) -> PoAResult:
    """Ratio of the optimum to the worst enumerated approximate Nash
    profile, checked against the alpha + 1 bound."""
    factor = check_alpha(alpha)
    shared = SearchBudget.ensure(budget)
    equilibria = enumerate_nash(instance, factor, shared)
    worst_profile, worst_value = _worst(instance, equilibria)
    opt_profile, opt_value = compute_opt(instance, shared)
    ratio = _ratio(opt_value, worst_value)
    bound = bound_nash(factor)
    return PoAResult(concept="nash", alpha=factor, opt_welfare=opt_value,
                     worst_equilibrium_welfare=worst_value, ratio=ratio,
                     bound=bound, bound_satisfied=ratio <= bound,
                     worst_profile=worst_profile, opt_profile=opt_profile)


def empirical_sequential_poa(instance: Instance, alpha,
                             budget: int | SearchBudget | None = None
                             ) -> PoAResult:
    """Worst ratio over all player orders and all sequential outcomes.

    Always checked against alpha + 1; for instances built on a shared
    symmetric base, additionally against the certified enclosure of
    exp(1/alpha) / (exp(1/alpha) - 1).
    """
    factor = check_alpha(alpha)
    shared = SearchBudget.ensure(budget)
    worst_profile: Profile | None = None
    worst_value: Fraction | None = None
    examined = 0
    for order in permutations(range(instance.n)):
        examined += 1
        for profile in enumerate_spe_outcomes(instance, order, factor, shared):
            value = welfare(instance, profile)
            if worst_value is None or value < worst_value:
                worst_profile, worst_value = profile, value
    if worst_profile is None:
        raise RuntimeError("sequential play produced no outcome")
    opt_profile, opt_value = compute_opt(instance, shared)
    ratio = _ratio(opt_value, worst_value)
    if instance.symmetric:
        bound: Bound = bound_sequential_symmetric(factor)
        satisfied = ratio_within_sequential_bound(ratio, factor)
    else:
        bound = bound_nash(factor)
        satisfied = ratio <= bound
    return PoAResult(concept="spe", alpha=factor, opt_welfare=opt_value,
                     worst_equilibrium_welfare=worst_value, ratio=ratio,
                     bound=bound, bound_satisfied=satisfied,
                     worst_profile=worst_profile, opt_profile=opt_profile,
                     orders_examined=examined)


def empirical_collusion_poa(instance: Instance, k: int, alpha,
                            budget: int | SearchBudget | None = None
                            ) -> PoAResult:
    """Ratio of the optimum to the worst approximate k-collusion profile.

    Candidates are the enumerated Nash profiles filtered by the coalition
    condition.  The bound alpha + (n-k)/(n-1) needs n >= 2; for a single
    player only the ratio is reported.
    """
    factor = check_alpha(alpha)
    if not 1 <= k <= instance.n:
        raise InputError(f"k must be between 1 and {instance.n}, got {k}")
    shared = SearchBudget.ensure(budget)
    candidates = [profile for profile in enumerate_nash(instance, factor, shared)
                  if verify_collusion(instance, profile, k, factor, shared).verdict]
    worst_profile, worst_value = _worst(instance, candidates)
    opt_profile, opt_value = compute_opt(instance, shared)
    ratio = _ratio(opt_value, worst_value)
    if instance.n >= 2:
        bound: Bound = bound_collusion(factor, instance.n, k)
        satisfied = ratio <= bound
    else:
        bound = None
        satisfied = True
    return PoAResult(concept="collusion", alpha=factor, opt_welfare=opt_value,
                     worst_equilibrium_welfare=worst_value, ratio=ratio,
                     bound=bound, bound_satisfied=satisfied,
                     worst_profile=worst_profile, opt_profile=opt_profile, k=k)
