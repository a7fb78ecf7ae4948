"""Exact and approximate best responses for single players and coalitions.

All searches compare weights as exact rationals; verdicts never depend on
floating point.  Ties are resolved deterministically:

* single-player best responses return the maximum-weight set that is
  smallest in item-id lexicographic order (sets compared as sorted
  tuples, so the empty set is smallest);
* coalition responses minimize the tuple of per-member sets under the
  same order, which makes a one-player coalition agree exactly with the
  single-player search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .budget import SearchBudget
from .errors import InputError
from .model import Instance, restrict_available


@dataclass(frozen=True)
class DeviationWitness:
    """A profitable deviation certifying an equilibrium violation.

    `proposed` is aligned with `players` (0-based indices); replaying the
    proposed sets must strictly beat alpha times the old joint value.
    """

    players: tuple[int, ...]
    proposed: tuple[frozenset[str], ...]
    old_value: Fraction
    new_value: Fraction


def check_alpha(alpha) -> Fraction:
    try:
        out = Fraction(alpha)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"alpha is not a rational: {alpha!r}") from exc
    if out < 1:
        raise InputError(f"alpha must be >= 1, got {out}")
    return out


def _check_player(instance: Instance, player: int) -> None:
    if not 0 <= player < instance.n:
        raise InputError(f"player index {player} out of range for n={instance.n}")


def _search_best_set(instance: Instance, player: int, pool: tuple[str, ...],
                     budget: SearchBudget) -> tuple[frozenset[str], Fraction]:
    """Depth-first branch and bound over subsets of `pool` in lexicographic
    order, pruning on remaining weight and on infeasible prefixes.

    Because subsets are visited in ascending lexicographic order, the
    first set attaining the running maximum is the wanted tie-break, and
    branches that can at best tie may be pruned.
    """
    system = instance.players[player]
    weights = instance.weights
    suffix = [Fraction(0)] * (len(pool) + 1)
    for idx in range(len(pool) - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] + weights[pool[idx]]

    best_set: frozenset[str] = frozenset()
    best_value = Fraction(0)

    def extend(current: tuple[str, ...], value: Fraction, start: int) -> None:
        nonlocal best_set, best_value
        for idx in range(start, len(pool)):
            budget.spend()
            if value + suffix[idx] <= best_value:
                break  # cannot strictly improve; a tie here would be lex-later
            candidate = current + (pool[idx],)
            candidate_set = frozenset(candidate)
            if not system.is_member(candidate_set, budget):
                continue
            candidate_value = value + weights[pool[idx]]
            if candidate_value > best_value:
                best_set, best_value = candidate_set, candidate_value
            extend(candidate, candidate_value, idx + 1)

    extend((), Fraction(0), 0)
    return best_set, best_value


@lru_cache(maxsize=1 << 16)
def _best_response_cached(instance: Instance, player: int,
                          available: frozenset[str]
                          ) -> tuple[frozenset[str], Fraction]:
    return _search_best_set(instance, player, tuple(sorted(available)),
                            SearchBudget())


def best_response(instance: Instance, player: int, available: Iterable[str],
                  budget: int | SearchBudget | None = None
                  ) -> tuple[frozenset[str], Fraction]:
    """Maximum-weight feasible subset of `available` for one player.

    Returns the set and its weight.  With the default budget, results are
    memoized per (instance, player, availability), which the enumeration
    routines rely on heavily.
    """
    _check_player(instance, player)
    pool = restrict_available(instance, available)
    if budget is None:
        return _best_response_cached(instance, player, pool)
    return _search_best_set(instance, player, tuple(sorted(pool)),
                            SearchBudget.ensure(budget))


def is_alpha_best_response(instance: Instance, player: int,
                           available: Iterable[str], chosen: Iterable[str],
                           alpha, budget: int | SearchBudget | None = None
                           ) -> Union[bool, DeviationWitness]:
    """Whether `chosen` is within a factor alpha of the best available set.

    The candidate pool is `available` united with `chosen`: a deviating
    player may always keep its own items.  Returns True, or the maximizing
    deviation as a witness (check the result with `is True`).
    """
    _check_player(instance, player)
    factor = check_alpha(alpha)
    held = restrict_available(instance, chosen)
    if not instance.players[player].is_member(held, budget):
        raise InputError(
            f"chosen set {sorted(held)} is not feasible for player {player + 1}")
    pool = restrict_available(instance, available) | held
    best_set, best_value = best_response(instance, player, pool, budget)
    held_value = instance.weight_of(held)
    if factor * held_value >= best_value:
        return True
    return DeviationWitness(players=(player,), proposed=(best_set,),
                            old_value=held_value, new_value=best_value)


def coalition_best_response(instance: Instance, coalition: Iterable[int],
                            available: Iterable[str],
                            budget: int | SearchBudget | None = None
                            ) -> tuple[tuple[frozenset[str], ...], Fraction]:
    """Best joint reallocation of `available` among the coalition members.

    Returns pairwise-disjoint feasible sets, one per member in ascending
    player order, maximizing the joint weight.  Exhaustive item-to-member
    assignment search with infeasible-prefix and remaining-weight pruning.
    """
    members = tuple(sorted(set(int(i) for i in coalition)))
    if not members:
        raise InputError("coalition must be nonempty")
    for member in members:
        _check_player(instance, member)
    pool = tuple(sorted(restrict_available(instance, available)))
    weights = instance.weights
    shared = SearchBudget.ensure(budget)

    suffix = [Fraction(0)] * (len(pool) + 1)
    for idx in range(len(pool) - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] + weights[pool[idx]]

    systems = [instance.players[m] for m in members]
    feasible_cache: list[dict[frozenset[str], bool]] = [
        {frozenset(): True} for _ in members]

    def feasible(slot: int, candidate: frozenset[str]) -> bool:
        cache = feasible_cache[slot]
        hit = cache.get(candidate)
        if hit is None:
            hit = systems[slot].is_member(candidate, shared)
            cache[candidate] = hit
        return hit

    sets: list[frozenset[str]] = [frozenset() for _ in members]
    best_value: Fraction | None = None
    best_key: tuple | None = None
    best_sets: tuple[frozenset[str], ...] = tuple(sets)

    def walk(idx: int, value: Fraction) -> None:
        nonlocal best_value, best_key, best_sets
        if best_value is not None and value + suffix[idx] < best_value:
            return
        if idx == len(pool):
            key = tuple(tuple(sorted(s)) for s in sets)
            if best_value is None or value > best_value or (
                    value == best_value and key < best_key):
                best_value, best_key, best_sets = value, key, tuple(sets)
            return
        item = pool[idx]
        for slot in range(len(members)):
            shared.spend()
            candidate = sets[slot] | {item}
            if feasible(slot, candidate):
                sets[slot] = candidate
                walk(idx + 1, value + weights[item])
                sets[slot] = candidate - {item}
        shared.spend()
        walk(idx + 1, value)

    walk(0, Fraction(0))
    assert best_value is not None
    return best_sets, best_value
