"""Command-line surface: sampling, shapes, profiles, distances, experiments,
verification suites, and two-sample KS comparisons.

Exit codes: 0 success, 1 validation/usage error, 2 verification failure
(a falsified check - should never happen). Every randomized subcommand
either takes --seed or generates one and prints it to stderr, so any run can
be reproduced bit for bit.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

import numpy as np

from .diagram import YoungDiagram
from .experiments import ExperimentConfig, ks_two_sample, run_experiment
from .perm import Permutation
from .rsk import schensted_shape
from .samplers import CORES, ENSEMBLES, FIX_RULES, RegimeSpec, derive_rng, sample_regime
from .shape_geom import (
    profile_distance_bound,
    profile_rows,
    scaled_rows,
    scaled_sup_distance,
    sup_profile_distance,
)
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _ensure_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(62)
    print(f"# seed {seed}", file=sys.stderr)
    return seed


def _regime_from_args(args) -> RegimeSpec:
    kwargs: dict = {"ensemble": args.ensemble}
    if args.core:
        kwargs["core"] = args.core
    if args.fix_rule:
        kwargs["fix_rule"] = args.fix_rule
    for key in ("theta", "beta", "p", "c"):
        v = getattr(args, key)
        if v is not None:
            kwargs[key] = v
    if args.cycle_type:
        kwargs["cycle_type"] = tuple(int(x) for x in args.cycle_type.split(","))
    return RegimeSpec(**kwargs)


def _add_regime_flags(sub, default_ensemble="uniform"):
    sub.add_argument("--ensemble", choices=ENSEMBLES, default=default_ensemble)
    sub.add_argument("--core", choices=CORES, default=None)
    sub.add_argument("--fix-rule", dest="fix_rule", choices=FIX_RULES, default=None)
    sub.add_argument("--theta", type=float, default=None)
    sub.add_argument("--beta", type=float, default=None)
    sub.add_argument("--p", type=float, default=None)
    sub.add_argument("--c", type=float, default=None)
    sub.add_argument("--cycle-type", dest="cycle_type", default=None,
                     help="comma-separated cycle lengths, e.g. 2,2")


def cmd_sample(args) -> int:
    seed = _ensure_seed(args)
    regime = _regime_from_args(args)
    for trial in range(args.count):
        rng = derive_rng(seed, args.n, trial)
        p = sample_regime(regime, args.n, rng)
        print(p.to_text())
    return 0


def cmd_shape(args) -> int:
    if args.perm is not None:
        words = [args.perm]
    else:
        words = [line for line in sys.stdin.read().splitlines() if line.strip()]
    for w in words:
        print(schensted_shape(Permutation.from_text(w)).to_text())
    return 0


def cmd_profile(args) -> int:
    d = YoungDiagram.from_text(args.diagram)
    if args.n is not None:
        m = args.m if args.m is not None else 0
        print("s,F,Phi")
        for s, f, phi in scaled_rows(d, args.n, m):
            print(f"{s!r},{f!r},{phi!r}")
    else:
        print("t,L")
        for t, L in profile_rows(d):
            print(f"{t},{L}")
    return 0


def cmd_distance(args) -> int:
    d = YoungDiagram.from_text(args.diagram)
    if args.other is not None:
        other = YoungDiagram.from_text(args.other)
        dist = sup_profile_distance(d, other)
        bound = profile_distance_bound(d, other)
        print(f"{dist!r} {bound!r}")
        return 0
    if args.n is None:
        raise UsageError("distance needs either --other or --n/--m")
    m = args.m if args.m is not None else 0
    print(repr(scaled_sup_distance(d, args.n, m)))
    return 0


def cmd_experiment(args) -> int:
    overrides = {
        "n_ladder": tuple(int(x) for x in args.n.split(",")) if args.n else None,
        "trials": args.trials,
        "seed": args.seed,
        "out": args.out,
    }
    if args.measurements:
        overrides["measurements"] = tuple(x.strip() for x in args.measurements.split(","))
    if args.config:
        text = Path(args.config).read_text()
        cfg = ExperimentConfig.from_text(text, **overrides)
    else:
        regime = _regime_from_args(args)
        clean = {k: v for k, v in overrides.items() if v is not None}
        if "seed" not in clean:
            clean["seed"] = _ensure_seed(args)
        if "n_ladder" not in clean:
            raise UsageError("experiment needs --n or a config file")
        if "trials" not in clean:
            clean["trials"] = 1
        cfg = ExperimentConfig(regime=regime, **clean)
    out_dir = Path(cfg.out or "experiment_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "records.csv"
    with csv_path.open("w") as sink:
        records, summary = run_experiment(cfg, workers=args.workers, csv_sink=sink)
    json_path = out_dir / "summary.json"
    json_path.write_text(summary.to_json() + "\n")
    print(f"records: {csv_path}")
    print(f"summary: {json_path}")
    for e in summary.entries:
        if e.statistic in ("shape_distance", "ell", "lambda1", "lambda2"):
            print(f"n={e.n} {e.statistic}: mean={e.mean:.6g} sd={e.sd:.3g} count={e.count}")
    return 0


def cmd_verify(args) -> int:
    kwargs: dict = {}
    if args.pairs is not None:
        kwargs["pairs"] = args.pairs
    if args.draws is not None:
        kwargs["draws"] = args.draws
    seed = _ensure_seed(args)
    report = run_suite(args.suite, seed=seed, **kwargs)
    print(json.dumps(report, indent=2, sort_keys=True, default=float))
    return 0 if report["ok"] else 2


def cmd_ks(args) -> int:
    x = np.loadtxt(args.a, ndmin=1)
    y = np.loadtxt(args.b, ndmin=1)
    print(repr(ks_two_sample(x, y)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permshape",
        description="Robinson-Schensted shapes of conjugacy-invariant random permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sample = sub.add_parser("sample", help="draw permutations from an ensemble")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--seed", type=int, default=None)
    p_sample.add_argument("--count", type=int, default=1)
    _add_regime_flags(p_sample)
    p_sample.set_defaults(func=cmd_sample)

    p_shape = sub.add_parser("shape", help="Schensted shape of a permutation")
    p_shape.add_argument("--perm", default=None, help="one-line notation; stdin if omitted")
    p_shape.set_defaults(func=cmd_shape)

    p_profile = sub.add_parser("profile", help="height profile CSV of a diagram")
    p_profile.add_argument("--diagram", required=True, help="comma-separated parts")
    p_profile.add_argument("--n", type=int, default=None, help="emit the rescaled profile for size n")
    p_profile.add_argument("--m", type=int, default=None, help="fixed-point count for the comparison curve")
    p_profile.set_defaults(func=cmd_profile)

    p_dist = sub.add_parser("distance", help="profile distances")
    p_dist.add_argument("--diagram", required=True)
    p_dist.add_argument("--other", default=None, help="second diagram: report sup distance and bound")
    p_dist.add_argument("--n", type=int, default=None)
    p_dist.add_argument("--m", type=int, default=None)
    p_dist.set_defaults(func=cmd_distance)

    p_exp = sub.add_parser("experiment", help="run a Monte Carlo trial ladder")
    p_exp.add_argument("--config", default=None, help="plain-text key=value config file")
    p_exp.add_argument("--n", default=None, help="comma-separated n ladder")
    p_exp.add_argument("--trials", type=int, default=None)
    p_exp.add_argument("--seed", type=int, default=None)
    p_exp.add_argument("--out", default=None)
    p_exp.add_argument("--workers", type=int, default=1)
    p_exp.add_argument("--measurements", default=None,
                       help="comma-separated subset of shape_distance,ell,lambda1,lambda2,cycle_stats")
    _add_regime_flags(p_exp)
    p_exp.set_defaults(func=cmd_experiment)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, required=True)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--pairs", type=int, default=None)
    p_verify.add_argument("--draws", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_ks = sub.add_parser("ks", help="two-sample Kolmogorov-Smirnov statistic")
    p_ks.add_argument("--a", required=True, help="file with one number per line")
    p_ks.add_argument("--b", required=True)
    p_ks.set_defaults(func=cmd_ks)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
