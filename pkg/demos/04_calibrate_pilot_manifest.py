"""Regenerate the pilot-run manifest that calibrates Monte Carlo thresholds.

The limit theorems give no rates, so the acceptance thresholds for the
shape-distance ladders are data measured here, not constants in code: run
the three reference regimes on the standard ladder, record per-rung mean and
95th-percentile shape distances, and store thresholds with a 1.6x margin on
the top rung. The acceptance suite (and anyone reproducing the numbers)
reads src/permshape/data/pilot_manifest.json.

Usage: python demos/04_calibrate_pilot_manifest.py [--trials 50] [--seed 31415926]
"""

import argparse
import json
from pathlib import Path

from permshape.experiments import ExperimentConfig, run_experiment
from permshape.samplers import RegimeSpec

LADDER = (1_000, 4_000, 16_000)

REGIMES = {
    "fpf_involution": RegimeSpec(ensemble="fpf_involution"),
    "composite_fpf_half": RegimeSpec(
        ensemble="composite", core="fpf_involution", fix_rule="linear", p=0.5
    ),
    "ncycle_theta_log": RegimeSpec(
        ensemble="composite", core="n_cycle", fix_rule="theta_log", theta=1.0
    ),
}


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=31_415_926)
    parser.add_argument("--margin", type=float, default=1.6)
    args = parser.parse_args()

    manifest = {
        "schema_version": 1,
        "pilot_seed": args.seed,
        "trials": args.trials,
        "n_ladder": list(LADDER),
        "margin": args.margin,
        "regimes": {},
    }
    for name, regime in REGIMES.items():
        cfg = ExperimentConfig(
            regime=regime,
            n_ladder=LADDER,
            trials=args.trials,
            seed=args.seed,
            measurements=("shape_distance",),
        )
        _, summary = run_experiment(cfg)
        means = [summary.get(n, "shape_distance").mean for n in LADDER]
        p95s = [summary.get(n, "shape_distance").q95 for n in LADDER]
        manifest["regimes"][name] = {
            "mean_D": means,
            "p95_D": p95s,
            "threshold_mean_top": round(args.margin * means[-1], 6),
            "threshold_p95_top": round(args.margin * p95s[-1], 6),
        }
        print(f"{name}: mean D along ladder = {[round(v, 5) for v in means]}")

    out = Path(__file__).resolve().parent.parent / "src" / "permshape" / "data" / "pilot_manifest.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
