"""Command-line front end.

Exit codes form a stable contract: 0 verified or success, 1 refuted with
a witness (or a failing report row), 2 input error, 3 search budget
exceeded.  All output is UTF-8, newline-terminated JSON or TSV; rationals
are printed exactly, decimals only as presentation extras.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from .budget import SearchBudget
from .equilibria import (enumerate_nash, enumerate_spe_outcomes, verify_collusion,
                         verify_nash, verify_spe_outcome)
from .errors import BudgetExceededError, InputError
from .factory import GeneratorSpec, generate, reference_profiles
from .metrics import (compute_opt, empirical_collusion_poa, empirical_poa,
                      empirical_sequential_poa)
from .model import Instance, Profile, welfare
from .report import paper_suite_rows, rows_to_json, rows_to_tsv
from .serialize import (document_to_instance, document_to_profile,
                        dumps_document, instance_to_document, loads_document,
                        parse_rational, poa_to_document, profile_to_document,
                        rational_str, report_to_document)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

PAPER_FAMILIES = ("ex_trivial", "ex_asym", "ex_sym", "ex_seq", "ex_collusion")


def _write(text: str) -> None:
    sys.stdout.write(text)


def _load_instance(path: str) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read instance file {path}: {exc}") from exc
    instance, _ = document_to_instance(loads_document(text))
    return instance


def _load_profile(path: str, instance: Instance) -> Profile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read profile file {path}: {exc}") from exc
    return document_to_profile(loads_document(text), instance)


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        if args.budget <= 0:
            raise InputError("--budget must be positive")
        return args.budget
    env = os.environ.get("SPG_BUDGET")
    if env:
        try:
            value = int(env)
        except ValueError as exc:
            raise InputError(f"SPG_BUDGET is not an integer: {env!r}") from exc
        if value <= 0:
            raise InputError("SPG_BUDGET must be positive")
        return value
    return None


def _parse_order(text: str, instance: Instance) -> tuple[int, ...]:
    try:
        order = tuple(int(part) - 1 for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"--order must be comma-separated integers: {text!r}") from exc
    if sorted(order) != list(range(instance.n)):
        raise InputError(
            f"--order must be a permutation of 1..{instance.n}, got {text!r}")
    return order


def _generator_spec(args) -> GeneratorSpec:
    params = {}
    for name in ("p", "q", "n", "k", "items", "max_weight", "seed", "copies"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    if getattr(args, "alpha", None) is not None:
        params["alpha"] = parse_rational(args.alpha, "--alpha")
    return GeneratorSpec.make(args.family, **params)


def _cmd_generate(args) -> int:
    spec = _generator_spec(args)
    instance = generate(spec)
    meta = {"family": spec.family,
            "params": {name: rational_str(value) if isinstance(value, Fraction)
                       else value for name, value in spec.params}}
    instance_doc = instance_to_document(instance, meta=meta)
    profiles = {}
    if spec.family in PAPER_FAMILIES:
        profiles = {name: profile_to_document(profile)
                    for name, profile in reference_profiles(spec).items()}
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "instance.json").write_text(dumps_document(instance_doc),
                                               encoding="utf-8")
        for name, doc in profiles.items():
            (out_dir / f"profile_{name}.json").write_text(dumps_document(doc),
                                                          encoding="utf-8")
        _write(dumps_document({"written": sorted(
            ["instance.json"] + [f"profile_{name}.json" for name in profiles]),
            "out": str(out_dir)}))
    else:
        _write(dumps_document({"instance": instance_doc, "profiles": profiles}))
    return EXIT_OK


def _cmd_verify(args) -> int:
    instance = _load_instance(args.instance)
    profile = _load_profile(args.profile, instance)
    alpha = parse_rational(args.alpha, "--alpha")
    budget = _budget(args)
    if args.concept == "nash":
        report = verify_nash(instance, profile, alpha, budget)
    elif args.concept == "spe":
        if args.order is None:
            raise InputError("--order is required for concept spe")
        order = _parse_order(args.order, instance)
        report = verify_spe_outcome(instance, profile, order, alpha, budget)
    else:
        if args.k is None:
            raise InputError("--k is required for concept collusion")
        report = verify_collusion(instance, profile, args.k, alpha, budget)
    _write(dumps_document(report_to_document(report)))
    return EXIT_OK if report.verdict else EXIT_REFUTED


def _cmd_opt(args) -> int:
    instance = _load_instance(args.instance)
    profile, value = compute_opt(instance, _budget(args))
    _write(dumps_document({"welfare": rational_str(value),
                           "profile": profile_to_document(profile)}))
    return EXIT_OK


def _cmd_nash(args) -> int:
    instance = _load_instance(args.instance)
    alpha = parse_rational(args.alpha, "--alpha")
    profiles = enumerate_nash(instance, alpha, _budget(args))
    _write(dumps_document({
        "alpha": rational_str(alpha),
        "count": len(profiles),
        "equilibria": [{"profile": profile_to_document(p),
                        "welfare": rational_str(welfare(instance, p))}
                       for p in profiles]}))
    return EXIT_OK


def _cmd_spe(args) -> int:
    instance = _load_instance(args.instance)
    alpha = parse_rational(args.alpha, "--alpha")
    order = _parse_order(args.order, instance)
    outcomes = enumerate_spe_outcomes(instance, order, alpha, _budget(args))
    _write(dumps_document({
        "alpha": rational_str(alpha),
        "order": [p + 1 for p in order],
        "count": len(outcomes),
        "outcomes": [{"profile": profile_to_document(p),
                      "welfare": rational_str(welfare(instance, p))}
                     for p in outcomes]}))
    return EXIT_OK


def _cmd_collusion(args) -> int:
    instance = _load_instance(args.instance)
    alpha = parse_rational(args.alpha, "--alpha")
    budget = _budget(args)
    shared = SearchBudget.ensure(budget)
    profiles = [p for p in enumerate_nash(instance, alpha, shared)
                if verify_collusion(instance, p, args.k, alpha, shared).verdict]
    _write(dumps_document({
        "alpha": rational_str(alpha),
        "k": args.k,
        "count": len(profiles),
        "equilibria": [{"profile": profile_to_document(p),
                        "welfare": rational_str(welfare(instance, p))}
                       for p in profiles]}))
    return EXIT_OK


def _cmd_poa(args) -> int:
    instance = _load_instance(args.instance)
    alpha = parse_rational(args.alpha, "--alpha")
    budget = _budget(args)
    if args.concept == "nash":
        result = empirical_poa(instance, alpha, budget)
    elif args.concept == "spe":
        result = empirical_sequential_poa(instance, alpha, budget)
    else:
        if args.k is None:
            raise InputError("--k is required for concept collusion")
        result = empirical_collusion_poa(instance, args.k, alpha, budget)
    _write(dumps_document(poa_to_document(result)))
    return EXIT_OK


def _cmd_report(args) -> int:
    if args.suite != "paper":
        raise InputError(f"unknown suite {args.suite!r}")
    rows = paper_suite_rows(_budget(args))
    tsv = rows_to_tsv(rows)
    doc = dumps_document(rows_to_json(rows))
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report.tsv").write_text(tsv, encoding="utf-8")
        (out_dir / "report.json").write_text(doc, encoding="utf-8")
    _write(tsv)
    return EXIT_OK if all(row.satisfied for row in rows) else EXIT_REFUTED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spg",
        description="Set packing games: equilibrium verification, "
                    "enumeration, and price-of-anarchy measurements.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate an instance family")
    gen.add_argument("family", choices=list(PAPER_FAMILIES)
                     + ["random_explicit", "random_symmetric"])
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--alpha")
    gen.add_argument("--items", type=int)
    gen.add_argument("--max-weight", dest="max_weight", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--copies", type=int)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="verify a profile against a concept")
    ver.add_argument("--instance", required=True)
    ver.add_argument("--profile", required=True)
    ver.add_argument("--concept", required=True,
                     choices=["nash", "spe", "collusion"])
    ver.add_argument("--alpha", default="1")
    ver.add_argument("--k", type=int)
    ver.add_argument("--order")
    ver.add_argument("--budget", type=int)
    ver.set_defaults(func=_cmd_verify)

    opt = sub.add_parser("opt", help="compute the centralized optimum")
    opt.add_argument("--instance", required=True)
    opt.add_argument("--budget", type=int)
    opt.set_defaults(func=_cmd_opt)

    nash = sub.add_parser("nash", help="enumerate approximate Nash profiles")
    nash.add_argument("--instance", required=True)
    nash.add_argument("--alpha", default="1")
    nash.add_argument("--budget", type=int)
    nash.set_defaults(func=_cmd_nash)

    spe = sub.add_parser("spe", help="enumerate sequential outcomes")
    spe.add_argument("--instance", required=True)
    spe.add_argument("--order", required=True)
    spe.add_argument("--alpha", default="1")
    spe.add_argument("--budget", type=int)
    spe.set_defaults(func=_cmd_spe)

    col = sub.add_parser("collusion", help="enumerate k-collusion profiles")
    col.add_argument("--instance", required=True)
    col.add_argument("--k", type=int, required=True)
    col.add_argument("--alpha", default="1")
    col.add_argument("--budget", type=int)
    col.set_defaults(func=_cmd_collusion)

    poa = sub.add_parser("poa", help="measure a price of anarchy")
    poa.add_argument("--instance", required=True)
    poa.add_argument("--concept", required=True,
                     choices=["nash", "spe", "collusion"])
    poa.add_argument("--alpha", default="1")
    poa.add_argument("--k", type=int)
    poa.add_argument("--budget", type=int)
    poa.set_defaults(func=_cmd_poa)

    rep = sub.add_parser("report", help="run the bound-reproduction suite")
    rep.add_argument("--suite", default="paper")
    rep.add_argument("--out")
    rep.add_argument("--budget", type=int)
    rep.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        _write(dumps_document({"error": "budget-exceeded", "detail": str(exc)}))
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
