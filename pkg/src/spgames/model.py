"""Core data model: items, instances, strategy profiles, payoffs, welfare.

All weights and values are exact rationals (`fractions.Fraction`); no
floating point enters any comparison made here.  Every type is an
immutable value object, so instances and profiles can be shared freely
and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .errors import InputError
from .feasibility import FeasibilitySystem, SharedSymmetricSystem


def _weight(value) -> Fraction:
    try:
        out = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"weight is not a rational: {value!r}") from exc
    if out < 0:
        raise InputError(f"item weights must be nonnegative, got {out}")
    return out


@dataclass(frozen=True)
class Item:
    """One indivisible item with a nonnegative rational weight."""

    id: str
    weight: Fraction

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InputError(f"item id must be a nonempty string, got {self.id!r}")
        object.__setattr__(self, "weight", _weight(self.weight))


@dataclass(frozen=True)
class Instance:
    """A set packing game: a ground set of items plus one feasibility
    system per player.

    `symmetric` marks instances built from a single shared base family
    (all players are `SharedSymmetricSystem` views of the same base); it
    is set by construction, never inferred.
    """

    items: tuple[Item, ...]
    players: tuple[FeasibilitySystem, ...]
    symmetric: bool = False

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "players", tuple(self.players))
        if not self.players:
            raise InputError("an instance needs at least one player")
        ids = [item.id for item in self.items]
        if len(set(ids)) != len(ids):
            raise InputError("item ids must be unique within an instance")
        known = set(ids)
        for index, system in enumerate(self.players):
            unknown = system.universe() - known
            if unknown:
                raise InputError(
                    f"player {index + 1} references unknown items: {sorted(unknown)}")
        if self.symmetric:
            if not all(isinstance(s, SharedSymmetricSystem) for s in self.players):
                raise InputError("symmetric instances require shared-base players")
            bases = {s.base for s in self.players}
            if len(bases) != 1:
                raise InputError("symmetric instances require one shared base")

    @property
    def n(self) -> int:
        return len(self.players)

    @cached_property
    def weights(self) -> dict[str, Fraction]:
        return {item.id: item.weight for item in self.items}

    @cached_property
    def item_ids(self) -> frozenset[str]:
        return frozenset(self.weights)

    @cached_property
    def ordered_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.weights))

    def weight_of(self, items: Iterable[str]) -> Fraction:
        total = Fraction(0)
        for item_id in items:
            weight = self.weights.get(item_id)
            if weight is None:
                raise InputError(f"unknown item id {item_id!r}")
            total += weight
        return total


@dataclass(frozen=True)
class Profile:
    """One item set per player."""

    sets: tuple[frozenset[str], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "sets", tuple(frozenset(str(i) for i in s) for s in self.sets))

    @property
    def n(self) -> int:
        return len(self.sets)

    def items_of(self, player: int) -> frozenset[str]:
        return self.sets[player]

    def all_items(self) -> frozenset[str]:
        out: set[str] = set()
        for s in self.sets:
            out |= s
        return frozenset(out)

    def replace(self, player: int, items: Iterable[str]) -> "Profile":
        sets = list(self.sets)
        sets[player] = frozenset(items)
        return Profile(tuple(sets))


@dataclass(frozen=True)
class Payoff:
    """Either a finite rational payoff or the distinguished infeasible
    outcome a player receives when selections overlap.

    The infeasible payoff compares strictly less than every finite one,
    making the order total without any sentinel number.
    """

    value: Optional[Fraction] = None

    @classmethod
    def finite(cls, value) -> "Payoff":
        return cls(Fraction(value))

    @property
    def is_infeasible(self) -> bool:
        return self.value is None

    def _key(self):
        return (0, Fraction(0)) if self.value is None else (1, self.value)

    def __lt__(self, other: "Payoff") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Payoff") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "Payoff") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "Payoff") -> bool:
        return self._key() >= other._key()


INFEASIBLE = Payoff()


@dataclass(frozen=True)
class Violation:
    """One reason a profile is not a valid packing.

    kind is one of "size_mismatch", "unknown_item", "infeasible_set",
    "overlap"; `players` are 0-based indices.
    """

    kind: str
    players: tuple[int, ...]
    items: frozenset[str] = frozenset()


def _check_player_index(instance: Instance, player: int) -> None:
    if not 0 <= player < instance.n:
        raise InputError(f"player index {player} out of range for n={instance.n}")


def payoff(instance: Instance, profile: Profile, player: int) -> Payoff:
    """Payoff of one player under a profile.

    Infeasible exactly when the player's set overlaps another player's;
    otherwise the total weight of the player's items.  The player's own
    set must belong to their feasibility system (an input error, distinct
    from the overlap outcome).
    """
    _check_player_index(instance, player)
    if profile.n != instance.n:
        raise InputError(
            f"profile has {profile.n} players, instance has {instance.n}")
    for s in profile.sets:
        unknown = s - instance.item_ids
        if unknown:
            raise InputError(f"unknown item ids in profile: {sorted(unknown)}")
    own = profile.items_of(player)
    if not instance.players[player].is_member(own):
        raise InputError(
            f"set {sorted(own)} is not feasible for player {player + 1}")
    for other in range(instance.n):
        if other != player and own & profile.items_of(other):
            return INFEASIBLE
    return Payoff.finite(instance.weight_of(own))


def validate_profile(instance: Instance, profile: Profile) -> list[Violation]:
    """All reasons a profile fails to be a valid packing; empty when valid.

    Reports every overlapping pair and every per-player feasibility
    failure.  Total: never raises.
    """
    if profile.n != instance.n:
        return [Violation("size_mismatch", players=())]
    out: list[Violation] = []
    for index, selected in enumerate(profile.sets):
        unknown = selected - instance.item_ids
        if unknown:
            out.append(Violation("unknown_item", players=(index,),
                                 items=frozenset(unknown)))
        elif not instance.players[index].is_member(selected):
            out.append(Violation("infeasible_set", players=(index,),
                                 items=selected))
    for a in range(instance.n):
        for b in range(a + 1, instance.n):
            shared = profile.items_of(a) & profile.items_of(b)
            if shared:
                out.append(Violation("overlap", players=(a, b),
                                     items=frozenset(shared)))
    return out


def welfare(instance: Instance, profile: Profile) -> Fraction:
    """Total weight collected by a valid profile.

    By disjointness this equals the weight of the union of all selected
    items.  Raises on invalid profiles: the welfare of an overlapping or
    infeasible selection is undefined.
    """
    violations = validate_profile(instance, profile)
    if violations:
        raise InputError(f"profile is not valid: {violations}")
    total = Fraction(0)
    for selected in profile.sets:
        total += instance.weight_of(selected)
    return total


def restrict_available(instance: Instance, available: Iterable[str]) -> frozenset[str]:
    """Validate and freeze an availability set (must be within the ground set)."""
    out = frozenset(str(i) for i in available)
    unknown = out - instance.item_ids
    if unknown:
        raise InputError(f"availability references unknown items: {sorted(unknown)}")
    return out
