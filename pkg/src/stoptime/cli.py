"""Command-line surface.

Exit codes: 0 success, 1 check failure, 2 input error.
STOPTIME_SEED overrides --seed wherever a seed is taken.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

import numpy as np

from . import convert, games, problems, sampling
from .experiment import ExperimentConfig, run_experiment
from .serialize import (InputError, dump_json, load_json, process_from_dict,
                        space_from_dict, stopping_time_from_dict,
                        stopping_time_to_dict)
from .space import SpaceError
from .times import (DistributionST, MixedST, PureST, RandomizedST,
                    validate_distribution, validate_mixed, validate_pure,
                    validate_randomized)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _seed(args) -> int:
    env = os.environ.get("STOPTIME_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _load_space(path):
    return space_from_dict(load_json(path))


def _load_stop(path):
    return stopping_time_from_dict(load_json(path))


def _validate_stop(space, eta):
    if isinstance(eta, PureST):
        return validate_pure(space, eta)
    if isinstance(eta, MixedST):
        return validate_mixed(space, eta)
    if isinstance(eta, RandomizedST):
        return validate_randomized(space, eta)
    if isinstance(eta, DistributionST):
        return validate_distribution(space, eta)
    raise InputError("unknown stopping-time object")


def cmd_validate(args) -> int:
    doc = load_json(args.file)
    if "kind" in doc:
        if args.space is None:
            raise InputError("validating a stopping time needs --space")
        space = _load_space(args.space)
        report = _validate_stop(space, stopping_time_from_dict(doc))
    elif "partitions" in doc:
        space_from_dict(doc)
        report = []
    elif "values" in doc:
        process_from_dict(doc)
        report = []
    else:
        raise InputError("unrecognized document (no kind/partitions/values)")
    for v in report:
        print(v)
    if report:
        return EXIT_CHECK_FAILED
    print("valid")
    return EXIT_OK


def cmd_convert(args) -> int:
    space = _load_space(args.space)
    eta = _load_stop(args.file)
    bad = _validate_stop(space, eta)
    if bad:
        raise InputError(f"input stopping time invalid: {bad[0]}")
    delta = convert.to_distribution(space, eta)
    if args.to == "distribution":
        out = delta
    elif args.to == "randomized":
        out = convert.randomized_of_distribution(space, delta)
    elif args.to == "mixed":
        out = convert.mixed_of_distribution(space, delta)
    else:
        raise InputError(f"cannot convert to {args.to!r}")
    doc = stopping_time_to_dict(out)
    if args.output:
        dump_json(doc, args.output)
    else:
        import json
        print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_equiv(args) -> int:
    space = _load_space(args.space)
    a = _load_stop(args.a)
    b = _load_stop(args.b)
    for eta, path in ((a, args.a), (b, args.b)):
        bad = _validate_stop(space, eta)
        if bad:
            raise InputError(f"{path}: invalid stopping time: {bad[0]}")
    if convert.equivalent(space, a, b):
        print("equivalent")
        return EXIT_OK
    w, t, ma, mb = convert.first_difference(space, a, b)
    print(f"not equivalent: outcome {w} time {t}: {ma} != {mb}")
    return EXIT_CHECK_FAILED


def cmd_payoff(args) -> int:
    space = _load_space(args.space)
    reward = process_from_dict(load_json(args.reward))
    problem = problems.StoppingProblem(space, reward)
    eta = _load_stop(args.stop)
    bad = _validate_stop(space, eta)
    if bad:
        raise InputError(f"invalid stopping time: {bad[0]}")
    value = problems.payoff(problem, eta)
    print(f"{value} ({float(value):.10g})")
    if args.check_kuhn:
        delta = convert.to_distribution(space, eta)
        routes = {
            "distribution": problems.payoff_distribution(problem, delta),
            "randomized": problems.payoff_randomized(
                problem, convert.randomized_of_distribution(space, delta)),
            "mixed": problems.payoff_mixed(
                problem, convert.mixed_of_distribution(space, delta)),
        }
        if any(v != value for v in routes.values()):
            print(f"route mismatch: {routes}")
            return EXIT_CHECK_FAILED
        print("all representation routes agree")
    return EXIT_OK


def cmd_game(args) -> int:
    space = _load_space(args.space)
    game = games.StoppingGame(
        space,
        process_from_dict(load_json(args.x)),
        process_from_dict(load_json(args.y)),
        process_from_dict(load_json(args.z)))
    tau1 = _load_stop(args.p1)
    tau2 = _load_stop(args.p2)
    for eta, path in ((tau1, args.p1), (tau2, args.p2)):
        bad = _validate_stop(space, eta)
        if bad:
            raise InputError(f"{path}: invalid stopping time: {bad[0]}")
    delta2 = convert.to_distribution(space, tau2)
    if args.route in ("lift", "both"):
        via_lift = games.game_payoff_via_lift(game, tau1, delta2)
    if args.route in ("symmetric", "both"):
        mu1 = convert.mixed_of_distribution(
            space, convert.to_distribution(space, tau1))
        mu2 = convert.mixed_of_distribution(space, delta2)
        symmetric = games.game_payoff_symmetric(game, mu1, mu2)
    if args.route == "p2view":
        delta1 = convert.to_distribution(space, tau1)
        value = games.game_payoff_player2_view(game, delta1, tau2)
        print(f"{value} ({float(value):.10g})")
        return EXIT_OK
    if args.route == "lift":
        print(f"{via_lift} ({float(via_lift):.10g})")
        return EXIT_OK
    if args.route == "symmetric":
        print(f"{symmetric} ({float(symmetric):.10g})")
        return EXIT_OK
    print(f"lift:      {via_lift} ({float(via_lift):.10g})")
    print(f"symmetric: {symmetric} ({float(symmetric):.10g})")
    if via_lift != symmetric:
        print("routes disagree")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_sample(args) -> int:
    space = _load_space(args.space)
    eta = _load_stop(args.stop)
    bad = _validate_stop(space, eta)
    if bad:
        raise InputError(f"invalid stopping time: {bad[0]}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(_seed(args))))
    samples = sampling.sample_many(space, eta, rng, args.n)
    reference = None
    if args.ref:
        reference = _load_stop(args.ref)
        if not isinstance(reference, DistributionST):
            reference = convert.to_distribution(space, reference)
    freq, tv = sampling.empirical_delta(space, samples, reference)
    for (w, j), f in sorted(freq.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        print(f"{w},{space.grid[j]},{f:.6f}")
    if tv is not None:
        print(f"tv,{tv:.6f}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    config = ExperimentConfig(
        seed=_seed(args),
        n_instances=args.instances,
        n_samples=args.samples,
        max_outcomes=args.max_outcomes,
        max_grid_points=args.max_grid_points,
        max_breaks=args.max_breaks,
        max_denominator=args.max_denominator,
        tv_tolerance=args.tv_tolerance,
        jobs=args.jobs)
    report = run_experiment(config)
    csv_text = report.to_csv()
    if args.output:
        with open(args.output, "w") as f:
            f.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    n_checks = len(report.rows)
    print(f"# {n_checks} checks, {report.n_failed} failed", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stoptime",
        description="Random stopping times on finite filtered spaces: "
                    "validation, conversion, payoffs, games, sampling, fuzzing.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a space, process, or stopping time")
    p.add_argument("file")
    p.add_argument("--space", help="space file (required for stopping times)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert a stopping time to another kind")
    p.add_argument("file")
    p.add_argument("--to", required=True,
                   choices=["mixed", "randomized", "distribution"])
    p.add_argument("--space", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("equiv", help="test two stopping times for equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("payoff", help="evaluate a stopping problem payoff")
    p.add_argument("--space", required=True)
    p.add_argument("--reward", required=True)
    p.add_argument("--stop", required=True)
    p.add_argument("--check-kuhn", action="store_true",
                   help="also evaluate every representation route and compare")
    p.set_defaults(func=cmd_payoff)

    p = sub.add_parser("game", help="evaluate a two-player stopping game payoff")
    p.add_argument("--space", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--route", default="both",
                   choices=["lift", "symmetric", "both", "p2view"])
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("sample", help="draw Monte Carlo samples of a stopping time")
    p.add_argument("--space", required=True)
    p.add_argument("--stop", required=True)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ref", help="reference stop law for a TV distance")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("fuzz", help="run the fuzzed property campaign")
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--max-outcomes", type=int, default=8)
    p.add_argument("--max-grid-points", type=int, default=6)
    p.add_argument("--max-breaks", type=int, default=8)
    p.add_argument("--max-denominator", type=int, default=64)
    p.add_argument("--tv-tolerance", type=float, default=0.01)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", help="write the CSV report here")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SpaceError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
