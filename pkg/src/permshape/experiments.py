"""Monte Carlo engine: seeded trial ladders, rescaled statistics, summaries.

Trials are independent tasks; each derives its own random stream from
(seed, n, trial_index), so results are a pure function of the config no
matter how trials are scheduled. Aggregation sorts before reducing, which
makes summaries bit-identical under any record ordering and any worker
count. TrialRecord CSVs carry only deterministic fields (wall time stays on
the in-memory record).
"""

from __future__ import annotations

import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .perm import cycle_stats
from .rsk import lds, lis, schensted_shape
from .samplers import RegimeSpec, derive_rng, sample_regime
from .shape_geom import scaled_sup_distance

CSV_SCHEMA_VERSION = 1
CSV_HEADER = (
    "schema_version,n,trial_index,fix_count,num_cycles,"
    "fixed_points_of_square,shape_distance,ell,lambda1,lambda2"
)
MEASUREMENTS = ("shape_distance", "ell", "lambda1", "lambda2", "cycle_stats")
RESCALE_MODES = ("tw2", "tw1", "tw4", "lln", "theta_log_l1")


@dataclass(frozen=True)
class TrialRecord:
    n: int
    trial_index: int
    fix_count: int
    num_cycles: int
    fixed_points_of_square: int
    shape_distance: float | None
    ell: int | None
    lambda1: int | None
    lambda2: int | None
    wall_time: float = 0.0

    def csv_row(self) -> str:
        def cell(v):
            return "" if v is None else (repr(v) if isinstance(v, float) else str(v))

        return ",".join(
            [
                str(CSV_SCHEMA_VERSION),
                str(self.n),
                str(self.trial_index),
                str(self.fix_count),
                str(self.num_cycles),
                str(self.fixed_points_of_square),
                cell(self.shape_distance),
                cell(self.ell),
                cell(self.lambda1),
                cell(self.lambda2),
            ]
        )


@dataclass(frozen=True)
class ExperimentConfig:
    regime: RegimeSpec
    n_ladder: tuple[int, ...]
    trials: int
    seed: int
    measurements: tuple[str, ...] = MEASUREMENTS
    out: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.n_ladder:
            raise ValueError("n_ladder must be nonempty")
        if self.n_ladder[0] < 1:
            raise ValueError("ladder sizes must be at least 1")
        if any(b <= a for a, b in zip(self.n_ladder, self.n_ladder[1:])):
            raise ValueError("n_ladder must be strictly increasing")
        unknown = set(self.measurements) - set(MEASUREMENTS)
        if unknown:
            raise ValueError(f"unknown measurements: {sorted(unknown)}")

    @classmethod
    def from_text(cls, text: str, **overrides) -> "ExperimentConfig":
        """Parse the plain-text config format (key = value lines, # comments)."""
        kv: dict[str, str] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            kv[key.strip()] = value.strip()
        regime = RegimeSpec.from_mapping(kv)
        kwargs: dict = {
            "regime": regime,
            "n_ladder": tuple(int(v) for v in kv.get("n_ladder", "1000").split(",")),
            "trials": int(kv.get("trials", "1")),
            "seed": int(kv.get("seed", "0")),
        }
        if "measurements" in kv:
            kwargs["measurements"] = tuple(v.strip() for v in kv["measurements"].split(",") if v.strip())
        if "out" in kv:
            kwargs["out"] = kv["out"]
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)


@dataclass(frozen=True)
class SummaryEntry:
    n: int
    statistic: str
    count: int
    mean: float
    sd: float
    q05: float
    q25: float
    q50: float
    q75: float
    q95: float


@dataclass(frozen=True)
class SummaryStats:
    entries: tuple[SummaryEntry, ...] = field(default_factory=tuple)

    def get(self, n: int, statistic: str) -> SummaryEntry:
        for e in self.entries:
            if e.n == n and e.statistic == statistic:
                return e
        raise KeyError((n, statistic))

    def to_json(self) -> str:
        doc = {
            "schema_version": CSV_SCHEMA_VERSION,
            "entries": [vars(e) for e in self.entries],
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def run_trial(regime: RegimeSpec, n: int, trial_index: int, seed: int,
              measurements: Sequence[str]) -> TrialRecord:
    """Sample one permutation and measure the requested statistics."""
    t0 = time.perf_counter()
    rng = derive_rng(seed, n, trial_index)
    p = sample_regime(regime, n, rng)
    cs = cycle_stats(p)
    wants = set(measurements)
    shape_distance = ell = lambda1 = lambda2 = None
    if wants & {"shape_distance", "lambda2"}:
        # lambda2 and the profile distance need the full shape; once we have
        # it the other shape statistics are free
        shape = schensted_shape(p)
        if "shape_distance" in wants:
            shape_distance = scaled_sup_distance(shape, n, cs.fixed_points)
        if "lambda2" in wants:
            lambda2 = shape.part(2)
        if "ell" in wants:
            ell = shape.num_rows
        if "lambda1" in wants:
            lambda1 = shape.part(1)
    else:
        if "ell" in wants:
            ell = lds(p)
        if "lambda1" in wants:
            lambda1 = lis(p)
    return TrialRecord(
        n=n,
        trial_index=trial_index,
        fix_count=cs.fixed_points,
        num_cycles=cs.num_cycles,
        fixed_points_of_square=cs.fixed_points_of_square,
        shape_distance=shape_distance,
        ell=ell,
        lambda1=lambda1,
        lambda2=lambda2,
        wall_time=time.perf_counter() - t0,
    )


def _run_trial_star(args) -> TrialRecord:
    return run_trial(*args)


def run_experiment(
    cfg: ExperimentConfig,
    workers: int = 1,
    csv_sink: TextIO | None = None,
) -> tuple[list[TrialRecord], SummaryStats]:
    """Run the full trial ladder; stream CSV rows as records are produced.

    Returns all TrialRecords plus order-independent SummaryStats. With
    workers > 1 the completion (and CSV row) order may vary, but record
    contents and the summary depend only on (cfg.seed, n, trial_index).
    """
    tasks = [
        (cfg.regime, n, t, cfg.seed, cfg.measurements)
        for n in cfg.n_ladder
        for t in range(cfg.trials)
    ]
    records: list[TrialRecord] = []
    if csv_sink is not None:
        csv_sink.write(CSV_HEADER + "\n")

    def emit(rec: TrialRecord):
        records.append(rec)
        if csv_sink is not None:
            csv_sink.write(rec.csv_row() + "\n")

    if workers <= 1:
        for task in tasks:
            emit(run_trial(*task))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rec in pool.map(_run_trial_star, tasks, chunksize=8):
                emit(rec)
    return records, summarize(records)


def summarize(records: Iterable[TrialRecord]) -> SummaryStats:
    """Aggregate records into per-(n, statistic) summaries via sorted reductions."""
    by_key: dict[tuple[int, str], list[float]] = {}
    for rec in records:
        for stat in ("shape_distance", "ell", "lambda1", "lambda2",
                     "fix_count", "num_cycles", "fixed_points_of_square"):
            v = getattr(rec, stat)
            if v is None:
                continue
            by_key.setdefault((rec.n, stat), []).append(float(v))
    entries = []
    for (n, stat) in sorted(by_key):
        vals = np.sort(np.asarray(by_key[(n, stat)], dtype=np.float64))
        qs = np.quantile(vals, [0.05, 0.25, 0.50, 0.75, 0.95])
        entries.append(
            SummaryEntry(
                n=n,
                statistic=stat,
                count=int(vals.size),
                mean=float(np.mean(vals)),
                sd=float(np.std(vals, ddof=1)) if vals.size > 1 else 0.0,
                q05=float(qs[0]),
                q25=float(qs[1]),
                q50=float(qs[2]),
                q75=float(qs[3]),
                q95=float(qs[4]),
            )
        )
    return SummaryStats(tuple(entries))


def write_outputs(cfg: ExperimentConfig, records: Sequence[TrialRecord],
                  summary: SummaryStats, out_dir: str | Path) -> tuple[Path, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "records.csv"
    with io.open(csv_path, "w") as fh:
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(rec.csv_row() + "\n")
    json_path = out / "summary.json"
    json_path.write_text(summary.to_json() + "\n")
    return csv_path, json_path


def read_records_csv(path: str | Path) -> list[TrialRecord]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unrecognized records CSV header in {path}")
    out = []
    for line in lines[1:]:
        cells = line.split(",")
        out.append(
            TrialRecord(
                n=int(cells[1]),
                trial_index=int(cells[2]),
                fix_count=int(cells[3]),
                num_cycles=int(cells[4]),
                fixed_points_of_square=int(cells[5]),
                shape_distance=float(cells[6]) if cells[6] else None,
                ell=int(cells[7]) if cells[7] else None,
                lambda1=int(cells[8]) if cells[8] else None,
                lambda2=int(cells[9]) if cells[9] else None,
            )
        )
    return out


# -- rescaled statistics -----------------------------------------------------


def load_pilot_manifest() -> dict:
    """Calibrated Monte Carlo thresholds measured by the pilot runs.

    Regenerate with demos/04_calibrate_pilot_manifest.py; thresholds are
    data, not code.
    """
    from importlib.resources import files

    return json.loads((files("permshape") / "data" / "pilot_manifest.json").read_text())


def rescale_statistic(rec: TrialRecord, mode: str, theta: float = 1.0) -> float:
    """Center/scale one trial the way the fluctuation and LLN limits do.

    tw2:          (ell - 2 sqrt(n - m)) / (n - m)^(1/6)
    tw1:          (ell - 2 sqrt(n)) / n^(1/6)
    tw4:          (lambda1 - 2 sqrt(n)) / n^(1/6)
    lln:          ell / sqrt(n - m)
    theta_log_l1: lambda1 * log(n) / (theta * n)
    with m the trial's measured fixed-point count.
    """
    n, m = rec.n, rec.fix_count
    if mode in ("tw2", "lln"):
        if n - m <= 0:
            raise ZeroDivisionError(f"mode {mode} needs n - m > 0 (n={n}, m={m})")
        if rec.ell is None:
            raise ValueError("record has no ell measurement")
        if mode == "tw2":
            return (rec.ell - 2.0 * math.sqrt(n - m)) / (n - m) ** (1.0 / 6.0)
        return rec.ell / math.sqrt(n - m)
    if mode == "tw1":
        if rec.ell is None:
            raise ValueError("record has no ell measurement")
        return (rec.ell - 2.0 * math.sqrt(n)) / n ** (1.0 / 6.0)
    if mode == "tw4":
        if rec.lambda1 is None:
            raise ValueError("record has no lambda1 measurement")
        return (rec.lambda1 - 2.0 * math.sqrt(n)) / n ** (1.0 / 6.0)
    if mode == "theta_log_l1":
        if rec.lambda1 is None:
            raise ValueError("record has no lambda1 measurement")
        return rec.lambda1 * math.log(n) / (theta * n)
    raise ValueError(f"unknown rescale mode {mode!r}")


def ks_two_sample(x: Sequence[float], y: Sequence[float]) -> float:
    """Classical two-sample Kolmogorov-Smirnov statistic (max CDF gap)."""
    xs = np.sort(np.asarray(x, dtype=np.float64))
    ys = np.sort(np.asarray(y, dtype=np.float64))
    if xs.size == 0 or ys.size == 0:
        raise ValueError("both samples must be nonempty")
    grid = np.concatenate([xs, ys])
    cdf_x = np.searchsorted(xs, grid, side="right") / xs.size
    cdf_y = np.searchsorted(ys, grid, side="right") / ys.size
    return float(np.max(np.abs(cdf_x - cdf_y)))


def lambda2_window(records: Iterable[TrialRecord], eps: float = 0.25) -> float:
    """Fraction of records with 2 - eps < lambda2 / sqrt(n) < 4 + eps."""
    total = hits = 0
    for rec in records:
        if rec.lambda2 is None:
            continue
        total += 1
        ratio = rec.lambda2 / math.sqrt(rec.n)
        if 2.0 - eps < ratio < 4.0 + eps:
            hits += 1
    if total == 0:
        raise ValueError("no records carry a lambda2 measurement")
    return hits / total
