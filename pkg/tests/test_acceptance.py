"""Acceptance suite: the headline reproduction facts, one criterion per test.

Each test prints a single pass/fail line (run with -s to see them) and
asserts the criterion at its stated tolerance.  All equality checks are
exact rational comparisons; the only irrational bound is handled through
its certified enclosure.
"""

import time
from fractions import Fraction
from itertools import combinations, permutations

from spgames import (GeneratorSpec, best_response, bound_sequential_symmetric,
                     coalition_best_response, compute_opt,
                     empirical_collusion_poa, empirical_poa,
                     empirical_sequential_poa, enumerate_nash,
                     enumerate_spe_outcomes, exp_enclosure, generate,
                     greedy_sequential_outcome, bound_series_b,
                     ratio_within_sequential_bound, reference_profiles,
                     verify_collusion, verify_nash, welfare)
from spgames.report import paper_suite_rows

from oracles import (brute_best_response, brute_coalition, brute_opt,
                     simulate_deadline_rounds)


def report_line(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"acceptance criterion {number}: {status} ({detail})")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_1_two_item_instance_end_to_end():
    started = time.perf_counter()
    game = generate(GeneratorSpec.make("ex_trivial"))
    _, opt_value = compute_opt(game)
    nash_sets = [[sorted(s) for s in p.sets] for p in enumerate_nash(game, 1)]
    poa = empirical_poa(game, 1).ratio
    seq = empirical_sequential_poa(game, 1)
    collusion = empirical_collusion_poa(game, 2, 1).ratio
    elapsed = time.perf_counter() - started
    ok = (opt_value == 2
          and nash_sets == [[["1"], ["2"]], [["2"], []]]
          and poa == 2
          and seq.ratio == 2 and seq.orders_examined == 2
          and collusion == 1
          and elapsed < 1.0)
    report_line(1, ok, f"opt=2, two equilibria, poa=2, seq=2, "
                       f"2-collusion=1 in {elapsed:.3f}s")


def test_criterion_2_asymmetric_bound_attained():
    details = []
    ok = True
    for p, q in ((1, 1), (3, 2), (2, 1), (3, 1)):
        started = time.perf_counter()
        game = generate(GeneratorSpec.make("ex_asym", p=p, q=q))
        result = empirical_poa(game, Fraction(p, q))
        elapsed = time.perf_counter() - started
        expected = Fraction(p + q, q)
        ok = ok and result.ratio == expected and elapsed < 10.0
        details.append(f"(p={p},q={q}):{result.ratio}={expected} "
                       f"in {elapsed:.2f}s")
    report_line(2, ok, "; ".join(details))


def test_criterion_3_symmetric_ratio_formula():
    spec = GeneratorSpec.make("ex_sym", p=3, q=2, n=3)
    game = generate(spec)
    bad = reference_profiles(spec)["bad_equilibrium"]
    bad_is_ne = verify_nash(game, bad, Fraction(3, 2)).verdict
    ratio = empirical_poa(game, Fraction(3, 2)).ratio
    ok = bad_is_ne and ratio == Fraction(13, 6)
    details = [f"(3,2,3): NE={bad_is_ne}, ratio={ratio}"]
    for p, q, n in ((3, 2, 3), (2, 1, 4)):
        expected = Fraction(p + q, q) - Fraction(1, n)
        measured = empirical_poa(generate(GeneratorSpec.make(
            "ex_sym", p=p, q=q, n=n)), Fraction(p, q)).ratio
        ok = ok and measured == expected
        details.append(f"(p={p},q={q},n={n}):{measured}={expected}")
    report_line(3, ok, "; ".join(details))


def test_criterion_4_sequential_greedy_and_trend():
    # Welfare values confirmed against the count-based simulation oracle.
    expected_welfare = {3: 7, 5: 18}
    ok = True
    details = []
    for n in (3, 5):
        game = generate(GeneratorSpec.make("ex_seq", n=n))
        outcome = greedy_sequential_outcome(game, range(n), 1, "deadline")
        value = welfare(game, outcome)
        oracle = sum(simulate_deadline_rounds(n, Fraction(1)))
        ratio = Fraction(n * n) / value
        inside = ratio_within_sequential_bound(ratio, 1)
        ok = ok and value == expected_welfare[n] == oracle and inside
        details.append(f"n={n}: welfare={value} (oracle {oracle}), "
                       f"ratio={ratio} certified below bound")

    # Trend toward exp(1)/(exp(1)-1) ~ 1.582.  The exact per-n sequence
    # wobbles (36/26 at n=6 dips below 25/18 at n=5), so the trend is
    # asserted at a granularity robust to those integer effects:
    # five-apart comparisons plus doubling checkpoints, all certified
    # below the bound.
    ratios = {}
    for n in range(3, 41):
        game = generate(GeneratorSpec.make("ex_seq", n=n))
        outcome = greedy_sequential_outcome(game, range(n), 1, "deadline")
        ratios[n] = Fraction(n * n) / welfare(game, outcome)
    below = all(ratio_within_sequential_bound(r, 1) for r in ratios.values())
    stride = all(ratios[n] <= ratios[n + 5] for n in range(3, 36))
    climbs = (ratios[5] < ratios[10] < ratios[20] < ratios[40])
    near = ratios[40] > Fraction(31, 20)  # past 1.55 on the way to 1.582
    ok = ok and below and stride and climbs and near
    details.append(f"trend 3..40: stride-5 nondecreasing={stride}, "
                   f"checkpoints climb={climbs}, r40={float(ratios[40]):.4f}")
    report_line(4, ok, "; ".join(details))


def test_criterion_5_collusion_constructions_are_tight():
    ok = True
    details = []
    for n, k, alpha in ((3, 2, Fraction(1)), (4, 2, Fraction(1)),
                        (4, 3, Fraction(1)), (3, 2, Fraction(3, 2))):
        spec = GeneratorSpec.make("ex_collusion", n=n, k=k, alpha=alpha)
        game = generate(spec)
        bad = reference_profiles(spec)["bad_equilibrium"]
        verdict = verify_collusion(game, bad, k, alpha).verdict
        _, opt_value = compute_opt(game)
        ratio = opt_value / welfare(game, bad)
        expected = alpha + Fraction(n - k, n - 1)
        ok = ok and verdict and ratio == expected
        if n == 3:  # enumeration is affordable: the worst equilibrium agrees
            ok = ok and empirical_collusion_poa(game, k, alpha).ratio == expected
        details.append(f"(n={n},k={k},alpha={alpha}): verified, "
                       f"ratio={ratio}={expected}")
    report_line(5, ok, "; ".join(details))


def test_criterion_6_sequential_outcomes_are_nash(corpus):
    violations = 0
    outcomes_checked = 0
    for game in corpus:
        for order in permutations(range(game.n)):
            for alpha in (Fraction(1), Fraction(3, 2)):
                for profile in enumerate_spe_outcomes(game, order, alpha):
                    outcomes_checked += 1
                    if not verify_nash(game, profile, alpha).verdict:
                        violations += 1
    report_line(6, violations == 0,
                f"{outcomes_checked} sequential outcomes over "
                f"{len(corpus)} instances, {violations} violations")


def test_criterion_7a_nash_ratio_bound(corpus):
    checked = 0
    ok = True
    for game in corpus:
        for alpha in (Fraction(1), Fraction(3, 2), Fraction(2)):
            result = empirical_poa(game, alpha)
            ok = ok and result.ratio <= alpha + 1 and result.bound_satisfied
            checked += 1
    report_line(7, ok, f"(a) {checked} worst-case ratios all <= alpha+1")


def test_criterion_7b_collusion_ratio_bound(corpus):
    checked = 0
    ok = True
    for game in corpus:
        for k in range(1, game.n + 1):
            for alpha in (Fraction(1), Fraction(3, 2)):
                result = empirical_collusion_poa(game, k, alpha)
                if game.n >= 2:
                    ok = ok and result.ratio <= alpha + Fraction(
                        game.n - k, game.n - 1)
                if k == game.n and alpha == 1:
                    ok = ok and result.ratio == 1
                checked += 1
    report_line(7, ok, f"(b) {checked} collusion ratios within "
                       f"alpha+(n-k)/(n-1), full coalitions exact at 1")


def test_criterion_7c_price_of_stability(corpus):
    ok = True
    for game in corpus:
        opt_profile, _ = compute_opt(game)
        ok = ok and verify_nash(game, opt_profile, 1).verdict
    report_line(7, ok, f"(c) optimum stable at alpha=1 on all "
                       f"{len(corpus)} corpus instances")


def test_criterion_7d_series_monotone_below_bound():
    ok = True
    for alpha in (Fraction(1), Fraction(3, 2), Fraction(2)):
        enclosure = bound_sequential_symmetric(alpha)
        values = [bound_series_b(alpha, x) for x in range(1, 101)]
        ok = ok and all(a < b for a, b in zip(values, values[1:]))
        ok = ok and all(v < enclosure.lo for v in values)
    report_line(7, ok, "(d) series monotone and below the certified "
                       "enclosure for x<=100, three alphas")


def test_criterion_7e_induction_inequalities_exact():
    import random
    rng = random.Random(13)
    ok = True
    samples = 0
    for _ in range(80):
        alpha = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        if alpha < 1:
            alpha = 1 / alpha
        parts = [rng.randint(1, 4) for _ in range(rng.randint(1, 6))]
        total = sum(parts)
        if total > 20:
            continue
        gamma = total * alpha
        share = lambda c: (gamma ** c - (gamma - 1) ** c) / gamma ** c
        for first in range(1, total + 1):
            ok = ok and Fraction(first) / gamma >= share(first)
        running = 0
        previous = Fraction(0)
        for part in parts:
            running += part
            ok = ok and (Fraction(part) / gamma
                         + (gamma - part) / gamma * previous) >= share(running)
            previous = share(running)
        samples += 1
    report_line(7, ok, f"(e) induction inequalities exact on {samples} "
                       f"sampled (alpha, copies) configurations")


def test_criterion_7f_sandwich():
    ok = True
    for alpha in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)):
        enclosure = bound_sequential_symmetric(alpha)
        ok = ok and alpha + Fraction(1, 2) <= enclosure.lo
        y = exp_enclosure(1 / alpha, terms=40)
        if alpha == 1:
            # exact equality case, certified by the field identity
            ok = ok and all(x / (x - 1) == 1 + 1 / (x - 1)
                            for x in (y.lo, y.hi))
        else:
            e = exp_enclosure(Fraction(1), terms=40)
            ok = ok and y.lo / (y.lo - 1) <= alpha + 1 / (e.hi - 1)
    report_line(7, ok, "(f) alpha+1/2 <= bound <= alpha+1/(e-1) at four alphas")


def test_criterion_8_oracle_equivalence(corpus):
    ok = True
    coalition_count = 0
    for game in corpus:
        for player in range(game.n):
            ok = ok and best_response(game, player, game.item_ids) == \
                brute_best_response(game, player, game.item_ids)
        ok = ok and compute_opt(game) == brute_opt(game)
        for size in range(1, min(3, game.n) + 1):
            for coalition in combinations(range(game.n), size):
                ok = ok and coalition_best_response(
                    game, coalition, game.item_ids) == brute_coalition(
                    game, coalition, game.item_ids)
                coalition_count += 1
    report_line(8, ok, f"best response, optimum, and {coalition_count} "
                       f"coalition searches match full enumeration on all "
                       f"{len(corpus)} instances")


def test_criterion_9_report_suite():
    started = time.perf_counter()
    rows = paper_suite_rows()
    elapsed = time.perf_counter() - started
    ok = all(row.satisfied for row in rows) and elapsed < 300.0
    report_line(9, ok, f"{len(rows)} rows all satisfied in {elapsed:.1f}s")
