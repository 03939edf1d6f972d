"""Parameter-sweep harness over the scenario configuration.

Grid points are the Cartesian product of the configured axis value lists,
in canonical (given) axis order. Each point derives its own master seed
from the base seed and the point's axis values, so extending an axis never
perturbs the estimates of existing points.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import itertools
from dataclasses import dataclass

from .montecarlo import CoverageEstimate, estimate_coverage
from .scenario import CONFIG_FIELD_NAMES, ConfigError, ScenarioConfig


@dataclass(frozen=True)
class SweepRecord:
    axes: dict  # axis name -> value at this grid point
    config: ScenarioConfig
    estimate: CoverageEstimate


def point_seed(master_seed: int, point: dict) -> int:
    """Stable 63-bit seed derived from the base seed and axis values."""
    text = f"{master_seed}|" + "|".join(f"{k}={point[k]!r}" for k in sorted(point))
    digest = hashlib.sha256(text.encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def grid_points(axes: dict) -> list:
    """Cartesian product of the axis value lists; empty axes -> one empty point."""
    names = list(axes)
    return [dict(zip(names, combo)) for combo in itertools.product(*axes.values())]


def _point_config(base: ScenarioConfig, point: dict) -> ScenarioConfig:
    for name in point:
        if name not in CONFIG_FIELD_NAMES:
            raise ConfigError(f"unknown sweep axis {name!r}")
    return base.with_values(**point, master_seed=point_seed(base.master_seed, point))


def _run_point(base: ScenarioConfig, point: dict) -> SweepRecord:
    cfg = _point_config(base, point)
    return SweepRecord(point, cfg, estimate_coverage(cfg))


def run_sweep(base: ScenarioConfig, axes: dict, workers: int = 1) -> list:
    """One coverage estimate per grid point, in canonical grid order."""
    base.validate()
    points = grid_points(axes)
    for p in points:
        _point_config(base, p)  # validate every point before any long run
    if workers > 1 and len(points) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_run_point, base, p) for p in points]
            return [f.result() for f in futs]
    return [_run_point(base, p) for p in points]


def optimal_n_m(records) -> tuple:
    """(n_m*, coverage at n_m*) over records differing only in n_m.

    Ties break toward the smallest n_m; record order does not matter.
    """
    records = list(records)
    if not records:
        raise ValueError("optimal_n_m needs at least one record")
    best = min(records, key=lambda r: (-r.estimate.p_hat, r.config.n_m))
    return best.config.n_m, best.estimate.p_hat
