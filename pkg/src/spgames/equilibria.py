"""Equilibrium concepts: approximate Nash, sequential (subgame perfect)
outcomes, and coalition-proof (k-collusion) profiles.

Sequential outcomes exploit the payoff structure of set packing games:
once a player moves, rational later players cannot touch its items, so a
node's value for the mover is decided by the per-node optimum and
backward induction collapses to forward branching over the actions that
are within a factor alpha of that optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .budget import SearchBudget
from .errors import InputError
from .best_response import (DeviationWitness, best_response, check_alpha,
                            coalition_best_response, is_alpha_best_response)
from .feasibility import feasible_subsets, max_cardinality_feasible
from .model import Instance, Profile, validate_profile, welfare


@dataclass(frozen=True)
class EquilibriumReport:
    """Outcome of one equilibrium verification.

    A False verdict always carries a witness that can be replayed through
    payoffs and feasibility checks.
    """

    concept: str
    alpha: Fraction
    verdict: bool
    welfare: Fraction
    witness: Optional[DeviationWitness] = None
    k: Optional[int] = None
    order: Optional[tuple[int, ...]] = None


def check_order(instance: Instance, order: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(i) for i in order)
    if sorted(out) != list(range(instance.n)):
        raise InputError(
            f"order {out} is not a permutation of 0..{instance.n - 1}")
    return out


def _require_valid(instance: Instance, profile: Profile) -> None:
    violations = validate_profile(instance, profile)
    if violations:
        raise InputError(f"profile is not valid: {violations}")


def verify_nash(instance: Instance, profile: Profile, alpha,
                budget: int | SearchBudget | None = None) -> EquilibriumReport:
    """Check the approximate unilateral-deviation condition for every player."""
    factor = check_alpha(alpha)
    _require_valid(instance, profile)
    total = welfare(instance, profile)
    for player in range(instance.n):
        others: set[str] = set()
        for k in range(instance.n):
            if k != player:
                others |= profile.items_of(k)
        available = instance.item_ids - others
        result = is_alpha_best_response(instance, player, available,
                                        profile.items_of(player), factor, budget)
        if result is not True:
            return EquilibriumReport(concept="nash", alpha=factor, verdict=False,
                                     welfare=total, witness=result)
    return EquilibriumReport(concept="nash", alpha=factor, verdict=True,
                             welfare=total)


def enumerate_nash(instance: Instance, alpha,
                   budget: int | SearchBudget | None = None
                   ) -> tuple[Profile, ...]:
    """All valid profiles satisfying the approximate Nash condition.

    Iterates item-to-player assignments (each item goes to one player or
    to nobody), pruning assignments whose per-player prefix is already
    infeasible.  The order of the returned profiles follows the
    lexicographic assignment order with players before "nobody".
    """
    factor = check_alpha(alpha)
    shared = SearchBudget.ensure(budget)
    ids = instance.ordered_ids
    n = instance.n
    shared.require((n + 1) ** len(ids))

    families = []
    set_weights = []
    for system in instance.players:
        family = feasible_subsets(system, ids, shared)
        families.append(frozenset(family))
        set_weights.append({T: instance.weight_of(T) for T in family})

    value_cache: list[dict[frozenset[str], Fraction]] = [{} for _ in range(n)]

    def best_value(player: int, available: frozenset[str]) -> Fraction:
        cache = value_cache[player]
        hit = cache.get(available)
        if hit is None:
            hit = max(w for T, w in set_weights[player].items() if T <= available)
            cache[available] = hit
        return hit

    sets: list[frozenset[str]] = [frozenset() for _ in range(n)]
    values: list[Fraction] = [Fraction(0) for _ in range(n)]
    assigned: set[str] = set()
    out: list[Profile] = []

    def walk(idx: int) -> None:
        if idx == len(ids):
            free = instance.item_ids - assigned
            for player in range(n):
                if factor * values[player] < best_value(player, free | sets[player]):
                    return
            out.append(Profile(tuple(sets)))
            return
        item = ids[idx]
        weight = instance.weights[item]
        for player in range(n):
            shared.spend()
            candidate = sets[player] | {item}
            if candidate in families[player]:
                sets[player] = candidate
                values[player] += weight
                assigned.add(item)
                walk(idx + 1)
                assigned.remove(item)
                values[player] -= weight
                sets[player] = candidate - {item}
        shared.spend()
        walk(idx + 1)

    walk(0)
    return tuple(out)


def greedy_sequential_outcome(instance: Instance, order: Iterable[int],
                              alpha=Fraction(1), selector: str = "exact",
                              budget: int | SearchBudget | None = None
                              ) -> Profile:
    """One pass of sequential play in `order`.

    selector "exact": each player takes its best response among the
    remaining items.  selector "deadline": each player scans remaining
    jobs by decreasing deadline, determines the maximum allocatable count
    m, and takes the first ceil(m / alpha) jobs of that scan; this
    requires a scheduling instance with equal item weights.
    """
    sequence = check_order(instance, order)
    factor = check_alpha(alpha)
    shared = SearchBudget.ensure(budget)
    remaining = set(instance.item_ids)
    sets: list[frozenset[str]] = [frozenset() for _ in range(instance.n)]

    if selector == "exact":
        for player in sequence:
            chosen, _ = best_response(instance, player, frozenset(remaining), shared)
            sets[player] = chosen
            remaining -= chosen
    elif selector == "deadline":
        if len({instance.weights[i] for i in instance.item_ids}) > 1:
            raise InputError("deadline selector requires equal item weights")
        for player in sequence:
            scan = max_cardinality_feasible(instance.players[player],
                                            frozenset(remaining),
                                            prefer_largest_deadline=True,
                                            budget=shared)
            take = math.ceil(Fraction(len(scan)) / factor)
            chosen = frozenset(scan[:take])
            sets[player] = chosen
            remaining -= chosen
    else:
        raise InputError(f"unknown selector {selector!r}")
    return Profile(tuple(sets))


def enumerate_spe_outcomes(instance: Instance, order: Iterable[int], alpha,
                           budget: int | SearchBudget | None = None
                           ) -> tuple[Profile, ...]:
    """All outcomes of approximately optimal sequential play under `order`.

    At each node the mover may take any feasible subset of the remaining
    items whose weight is within a factor alpha of the node optimum; the
    outcomes of all such choice combinations are collected.  Subtrees are
    shared across nodes with equal remaining-item sets.
    """
    sequence = check_order(instance, order)
    factor = check_alpha(alpha)
    shared = SearchBudget.ensure(budget)
    n = instance.n
    memo: dict[tuple[int, frozenset[str]],
               tuple[tuple[frozenset[str], ...], ...]] = {}

    def completions(depth: int, available: frozenset[str]
                    ) -> tuple[tuple[frozenset[str], ...], ...]:
        if depth == n:
            return ((),)
        key = (depth, available)
        cached = memo.get(key)
        if cached is not None:
            return cached
        player = sequence[depth]
        subsets = feasible_subsets(instance.players[player], available, shared)
        weighted = [(T, instance.weight_of(T)) for T in subsets]
        node_optimum = max(w for _, w in weighted)
        out: list[tuple[frozenset[str], ...]] = []
        for action, value in weighted:
            if factor * value < node_optimum:
                continue
            shared.spend()
            for tail in completions(depth + 1, available - action):
                out.append((action,) + tail)
        memo[key] = tuple(out)
        return memo[key]

    profiles = []
    for choice in completions(0, instance.item_ids):
        sets: list[frozenset[str]] = [frozenset() for _ in range(n)]
        for position, action in enumerate(choice):
            sets[sequence[position]] = action
        profiles.append(Profile(tuple(sets)))
    return tuple(profiles)


def verify_spe_outcome(instance: Instance, profile: Profile,
                       order: Iterable[int], alpha,
                       budget: int | SearchBudget | None = None
                       ) -> EquilibriumReport:
    """Whether a profile is realizable by approximately optimal sequential
    play under `order`: every player's set must be within a factor alpha
    of its node optimum along the play path."""
    sequence = check_order(instance, order)
    factor = check_alpha(alpha)
    _require_valid(instance, profile)
    total = welfare(instance, profile)
    available = set(instance.item_ids)
    for player in sequence:
        chosen = profile.items_of(player)
        best_set, best_value = best_response(instance, player,
                                             frozenset(available), budget)
        held_value = instance.weight_of(chosen)
        if factor * held_value < best_value:
            witness = DeviationWitness(players=(player,), proposed=(best_set,),
                                       old_value=held_value, new_value=best_value)
            return EquilibriumReport(concept="spe", alpha=factor, verdict=False,
                                     welfare=total, witness=witness,
                                     order=sequence)
        available -= chosen
    return EquilibriumReport(concept="spe", alpha=factor, verdict=True,
                             welfare=total, order=sequence)


def verify_collusion(instance: Instance, profile: Profile, k: int, alpha,
                     budget: int | SearchBudget | None = None
                     ) -> EquilibriumReport:
    """Check the joint-deviation condition for every coalition of at most
    k players.

    A coalition may reallocate its own items plus all unclaimed items.
    Coalitions are examined in lexicographic order by size; verification
    stops at the first violation, while a True verdict means all
    coalitions were checked.
    """
    factor = check_alpha(alpha)
    if not 1 <= k <= instance.n:
        raise InputError(f"k must be between 1 and {instance.n}, got {k}")
    _require_valid(instance, profile)
    shared = SearchBudget.ensure(budget)
    total = welfare(instance, profile)
    unclaimed = instance.item_ids - profile.all_items()

    for size in range(1, k + 1):
        for coalition in combinations(range(instance.n), size):
            held: set[str] = set()
            for member in coalition:
                held |= profile.items_of(member)
            pool = frozenset(held) | unclaimed
            proposed, joint_value = coalition_best_response(
                instance, coalition, pool, shared)
            held_value = instance.weight_of(held)
            if factor * held_value < joint_value:
                witness = DeviationWitness(players=coalition, proposed=proposed,
                                           old_value=held_value,
                                           new_value=joint_value)
                return EquilibriumReport(concept="collusion", alpha=factor,
                                         verdict=False, welfare=total,
                                         witness=witness, k=k)
    return EquilibriumReport(concept="collusion", alpha=factor, verdict=True,
                             welfare=total, k=k)
