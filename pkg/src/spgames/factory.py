"""Deterministic instance generators.

The `ex_*` families reproduce the known tight lower-bound constructions
for the three equilibrium concepts; the `random_*` families produce
seeded instances for property suites.  Every generator is pure: the same
parameters (and seed) always yield the identical instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import InputError
from .best_response import check_alpha
from .equilibria import greedy_sequential_outcome
from .feasibility import (ExplicitSystem, JobWindow, SharedSymmetricSystem,
                          SingleMachineSystem, TimeWindow,
                          UnrelatedMachinesSystem)
from .model import Instance, Item, Profile

FAMILIES = ("ex_trivial", "ex_asym", "ex_sym", "ex_seq", "ex_collusion",
            "random_explicit", "random_symmetric")


@dataclass(frozen=True)
class GeneratorSpec:
    """An addressable generator call: family name plus its parameters."""

    family: str
    params: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown instance family {self.family!r}")
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    @classmethod
    def make(cls, family: str, **params) -> "GeneratorSpec":
        return cls(family=family, params=tuple(sorted(params.items())))

    @property
    def param_map(self) -> dict[str, object]:
        return dict(self.params)


def _positive_int(params: Mapping[str, object], name: str, minimum: int = 1) -> int:
    if name not in params:
        raise InputError(f"missing generator parameter {name!r}")
    try:
        value = int(params[name])
    except (TypeError, ValueError) as exc:
        raise InputError(f"parameter {name!r} must be an integer") from exc
    if value < minimum:
        raise InputError(f"parameter {name!r} must be >= {minimum}, got {value}")
    return value


def _pad(count: int) -> int:
    return max(2, len(str(count)))


def ex_trivial() -> Instance:
    """Two unit items, two players; the second player can only take item 2."""
    items = (Item("1", Fraction(1)), Item("2", Fraction(1)))
    players = (ExplicitSystem(maximal_sets=(frozenset({"1"}), frozenset({"2"}))),
               ExplicitSystem(maximal_sets=(frozenset({"2"}),)))
    return Instance(items=items, players=players)


def ex_asym(p: int, q: int) -> Instance:
    """q+1 single-machine players over p + q unit jobs, all due at time 1.

    Player 1's machine runs every job in time 1/p, so it can fit any p
    jobs.  Every other machine runs a q-job in time 1 (one job at most)
    and a p-job in time 2 (never).  The worst Nash profile at
    alpha = p/q parks all q-jobs on player 1.
    """
    if not (isinstance(p, int) and isinstance(q, int)) or q < 1 or p < q:
        raise InputError("ex_asym requires integers p >= q >= 1")
    width = _pad(max(p, q))
    p_ids = [f"p{i:0{width}d}" for i in range(1, p + 1)]
    q_ids = [f"q{i:0{width}d}" for i in range(1, q + 1)]
    all_ids = p_ids + q_ids
    items = tuple(Item(i, Fraction(1)) for i in all_ids)
    windows = {i: TimeWindow(Fraction(0), Fraction(1)) for i in all_ids}

    players = []
    fast = {("m1", i): Fraction(1, p) for i in all_ids}
    players.append(UnrelatedMachinesSystem(machines=("m1",), processing=fast,
                                           jobs=windows))
    for index in range(2, q + 2):
        name = f"m{index}"
        slow = {(name, i): Fraction(1) for i in q_ids}
        slow.update({(name, i): Fraction(2) for i in p_ids})
        players.append(UnrelatedMachinesSystem(machines=(name,),
                                               processing=slow, jobs=windows))
    return Instance(items=items, players=tuple(players))


def ex_sym(p: int, q: int, n: int) -> Instance:
    """n identical single-machine players sharing one job pool.

    q(n-1) + p light jobs (weight 1) each take a 1/(q(n-1)+p) sliver of
    the unit window; n-1 heavy jobs (weight p) fill the whole window.
    """
    if not (isinstance(p, int) and isinstance(q, int)) or q < 1 or p < q:
        raise InputError("ex_sym requires integers p >= q >= 1")
    if n < 2:
        raise InputError("ex_sym requires n >= 2")
    light_count = q * (n - 1) + p
    heavy_count = n - 1
    width = _pad(max(light_count, heavy_count))
    light = [f"q{i:0{width}d}" for i in range(1, light_count + 1)]
    heavy = [f"p{i:0{width}d}" for i in range(1, heavy_count + 1)]
    items = tuple([Item(i, Fraction(1)) for i in light]
                  + [Item(i, Fraction(p)) for i in heavy])
    jobs = {i: JobWindow(Fraction(0), Fraction(1, light_count), Fraction(1))
            for i in light}
    jobs.update({i: JobWindow(Fraction(0), Fraction(1), Fraction(1))
                 for i in heavy})
    base = SingleMachineSystem(jobs=jobs)
    players = tuple(SharedSymmetricSystem(base=base, copies=1) for _ in range(n))
    return Instance(items=items, players=players, symmetric=True)


def ex_seq(n: int) -> Instance:
    """n identical players over n*n unit jobs in n deadline classes.

    Class k holds n jobs with deadline k; all jobs take unit time.  The
    optimum gives each player one job per class; sequential play that
    prefers large deadlines wastes the tight-deadline classes.
    """
    if n < 1:
        raise InputError("ex_seq requires n >= 1")
    width = _pad(n)
    jobs = {}
    ids = []
    for deadline in range(1, n + 1):
        for copy in range(1, n + 1):
            item_id = f"d{deadline:0{width}d}_{copy:0{width}d}"
            ids.append(item_id)
            jobs[item_id] = JobWindow(Fraction(0), Fraction(1), Fraction(deadline))
    items = tuple(Item(i, Fraction(1)) for i in sorted(ids))
    base = SingleMachineSystem(jobs=jobs)
    players = tuple(SharedSymmetricSystem(base=base, copies=1) for _ in range(n))
    return Instance(items=items, players=players, symmetric=True)


def ex_collusion(n: int, k: int, alpha) -> Instance:
    """Explicit-family instance where coalition-proofness is exactly tight.

    For players i != j there is a unit item owned by player i in the
    optimum and by player j in the equilibrium; each player additionally
    has a private item of weight (n-k) + (n-1)(alpha-1) reachable only in
    the optimum.  Each player may select subsets of its optimum bundle or
    of its equilibrium bundle, never a mix.
    """
    factor = check_alpha(alpha)
    if n < 2:
        raise InputError("ex_collusion requires n >= 2")
    if not 1 <= k <= n:
        raise InputError(f"ex_collusion requires 1 <= k <= n, got k={k}")
    width = _pad(n)
    private_weight = Fraction(n - k) + (n - 1) * (factor - 1)

    def shared_id(i: int, j: int) -> str:
        return f"x{i:0{width}d}_{j:0{width}d}"

    def private_id(i: int) -> str:
        return f"x{i:0{width}d}_{0:0{width}d}"

    items = []
    for i in range(1, n + 1):
        items.append(Item(private_id(i), private_weight))
        for j in range(1, n + 1):
            if i != j:
                items.append(Item(shared_id(i, j), Fraction(1)))
    items.sort(key=lambda item: item.id)

    players = []
    for i in range(1, n + 1):
        opt_bundle = frozenset({shared_id(i, j) for j in range(1, n + 1) if j != i}
                               | {private_id(i)})
        eq_bundle = frozenset({shared_id(j, i) for j in range(1, n + 1) if j != i})
        players.append(ExplicitSystem(maximal_sets=(opt_bundle, eq_bundle)))
    return Instance(items=tuple(items), players=tuple(players))


def random_explicit(n: int, items: int, max_weight: int, seed: int) -> Instance:
    """Seeded random instance with explicit per-player families."""
    if n < 1 or items < 1 or max_weight < 1:
        raise InputError("random_explicit requires n, items, max_weight >= 1")
    rng = random.Random(seed)
    width = _pad(items)
    ids = [f"i{index:0{width}d}" for index in range(1, items + 1)]
    ground = tuple(Item(i, Fraction(rng.randint(1, max_weight))) for i in ids)
    players = []
    for _ in range(n):
        sets = set()
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(1, min(4, items))
            sets.add(frozenset(rng.sample(ids, size)))
        maximal = [s for s in sets
                   if not any(s < other for other in sets)]
        players.append(ExplicitSystem(maximal_sets=tuple(maximal)))
    return Instance(items=ground, players=tuple(players))


def random_symmetric(n: int, copies: int, seed: int) -> Instance:
    """Seeded random instance on a shared explicit base family."""
    if n < 1 or copies < 1:
        raise InputError("random_symmetric requires n, copies >= 1")
    rng = random.Random(seed)
    item_count = 6
    ids = [f"i{index:02d}" for index in range(1, item_count + 1)]
    ground = tuple(Item(i, Fraction(rng.randint(1, 8))) for i in ids)
    sets = set()
    for _ in range(rng.randint(2, 3)):
        size = rng.randint(1, 3)
        sets.add(frozenset(rng.sample(ids, size)))
    maximal = tuple(s for s in sets if not any(s < other for other in sets))
    base = ExplicitSystem(maximal_sets=maximal)
    players = tuple(SharedSymmetricSystem(base=base, copies=rng.randint(1, copies))
                    for _ in range(n))
    return Instance(items=ground, players=players, symmetric=True)


def generate(spec: GeneratorSpec) -> Instance:
    """Build the instance addressed by a generator spec."""
    params = spec.param_map
    if spec.family == "ex_trivial":
        return ex_trivial()
    if spec.family == "ex_asym":
        return ex_asym(_positive_int(params, "p"), _positive_int(params, "q"))
    if spec.family == "ex_sym":
        return ex_sym(_positive_int(params, "p"), _positive_int(params, "q"),
                      _positive_int(params, "n"))
    if spec.family == "ex_seq":
        return ex_seq(_positive_int(params, "n"))
    if spec.family == "ex_collusion":
        if "alpha" not in params:
            raise InputError("missing generator parameter 'alpha'")
        return ex_collusion(_positive_int(params, "n"),
                            _positive_int(params, "k"), params["alpha"])
    if spec.family == "random_explicit":
        return random_explicit(_positive_int(params, "n"),
                               _positive_int(params, "items"),
                               _positive_int(params, "max_weight"),
                               _positive_int(params, "seed", minimum=0))
    if spec.family == "random_symmetric":
        return random_symmetric(_positive_int(params, "n"),
                                _positive_int(params, "copies"),
                                _positive_int(params, "seed", minimum=0))
    raise InputError(f"unknown instance family {spec.family!r}")


def reference_profiles(spec: GeneratorSpec) -> dict[str, Profile]:
    """The named optimum and worst-equilibrium profiles of a paper family.

    Not available for the random families.
    """
    params = spec.param_map
    if spec.family == "ex_trivial":
        return {
            "opt": Profile((frozenset({"1"}), frozenset({"2"}))),
            "bad_equilibrium": Profile((frozenset({"2"}), frozenset())),
        }
    if spec.family == "ex_asym":
        p = _positive_int(params, "p")
        q = _positive_int(params, "q")
        instance = ex_asym(p, q)
        p_ids = sorted(i for i in instance.item_ids if i.startswith("p"))
        q_ids = sorted(i for i in instance.item_ids if i.startswith("q"))
        opt_sets = [frozenset(p_ids)]
        for index in range(q):
            opt_sets.append(frozenset({q_ids[index]}))
        bad_sets = [frozenset(q_ids)] + [frozenset() for _ in range(q)]
        return {"opt": Profile(tuple(opt_sets)),
                "bad_equilibrium": Profile(tuple(bad_sets))}
    if spec.family == "ex_sym":
        p = _positive_int(params, "p")
        q = _positive_int(params, "q")
        n = _positive_int(params, "n")
        instance = ex_sym(p, q, n)
        light = sorted(i for i in instance.item_ids if i.startswith("q"))
        heavy = sorted(i for i in instance.item_ids if i.startswith("p"))
        opt_sets = [frozenset(light)]
        for index in range(n - 1):
            opt_sets.append(frozenset({heavy[index]}))
        bad_sets = [frozenset(light[q * index: q * (index + 1)])
                    for index in range(n)]
        return {"opt": Profile(tuple(opt_sets)),
                "bad_equilibrium": Profile(tuple(bad_sets))}
    if spec.family == "ex_seq":
        n = _positive_int(params, "n")
        instance = ex_seq(n)
        width = _pad(n)
        opt_sets = []
        for player in range(1, n + 1):
            opt_sets.append(frozenset(
                f"d{deadline:0{width}d}_{player:0{width}d}"
                for deadline in range(1, n + 1)))
        bad = greedy_sequential_outcome(instance, range(n), Fraction(1),
                                        selector="deadline")
        return {"opt": Profile(tuple(opt_sets)), "bad_equilibrium": bad}
    if spec.family == "ex_collusion":
        n = _positive_int(params, "n")
        k = _positive_int(params, "k")
        if "alpha" not in params:
            raise InputError("missing generator parameter 'alpha'")
        instance = ex_collusion(n, k, params["alpha"])
        width = _pad(n)
        opt_sets = []
        bad_sets = []
        for i in range(1, n + 1):
            opt_sets.append(frozenset(
                {f"x{i:0{width}d}_{j:0{width}d}" for j in range(1, n + 1) if j != i}
                | {f"x{i:0{width}d}_{0:0{width}d}"}))
            bad_sets.append(frozenset(
                f"x{j:0{width}d}_{i:0{width}d}" for j in range(1, n + 1) if j != i))
        return {"opt": Profile(tuple(opt_sets)),
                "bad_equilibrium": Profile(tuple(bad_sets))}
    raise InputError(
        f"reference profiles are not defined for family {spec.family!r}")
