"""Limit-shape convergence at desk scale.

For three conjugacy-invariant regimes, runs a geometric ladder of sizes and
tabulates the mean sup distance between the rescaled profile and the limit
curve with the matching fixed-point fraction. The means should fall roughly
like a power of n; the pilot manifest freezes thresholds from exactly this
kind of run.

Usage: python demos/02_limit_shape_convergence.py [--trials 20] [--seed 7]
"""

import argparse

from permshape.experiments import ExperimentConfig, run_experiment
from permshape.samplers import RegimeSpec

REGIMES = {
    "fpf involution (p=0)": RegimeSpec(ensemble="fpf_involution"),
    "half fixed points, matching core (p=1/2)": RegimeSpec(
        ensemble="composite", core="fpf_involution", fix_rule="linear", p=0.5
    ),
    "theta-log fixed points, long-cycle core": RegimeSpec(
        ensemble="composite", core="n_cycle", fix_rule="theta_log", theta=1.0
    ),
}


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--ladder", default="1000,4000,16000")
    args = parser.parse_args()
    ladder = tuple(int(x) for x in args.ladder.split(","))

    print(f"{'regime':45s}" + "".join(f"  n={n:<8d}" for n in ladder))
    for name, regime in REGIMES.items():
        cfg = ExperimentConfig(
            regime=regime, n_ladder=ladder, trials=args.trials, seed=args.seed,
            measurements=("shape_distance",),
        )
        _, summary = run_experiment(cfg)
        means = [summary.get(n, "shape_distance").mean for n in ladder]
        print(f"{name:45s}" + "".join(f"  {m:<10.5f}" for m in means))
    print("\nmean sup distance per rung; each row should decrease left to right")


if __name__ == "__main__":
    main()
