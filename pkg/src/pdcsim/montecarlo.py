"""Seeded Monte Carlo loop producing a coverage estimate.

Each trial i owns an independent substream derived from
(master_seed, trial index) through numpy's SeedSequence mixing, so the
estimate is bit-identical regardless of evaluation order or worker count;
the reduction is an exact integer sum.
"""

from __future__ import annotations

import concurrent.futures
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .association import NoPathAvailable, path_share_histogram, rules_for, select_path
from .scenario import ScenarioConfig, build_realization
from .sinr import Policy, path_covered


@dataclass(frozen=True)
class CoverageEstimate:
    p_hat: float
    ci95_half_width: float
    n_realizations: int
    path_shares: dict
    master_seed: int


def trial_rng(master_seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([master_seed, index]))


def run_trial(cfg: ScenarioConfig, rules, index: int):
    """One realization: build, associate, threshold. Returns (label, covered)."""
    rng = trial_rng(cfg.master_seed, index)
    real = build_realization(cfg, rng)
    try:
        path = select_path(real, rules)
    except NoPathAvailable:
        return None, False
    covered = path_covered(path, real, Policy(cfg.policy),
                           cfg.tau_access, cfg.tau_backhaul, cfg.noise_w)
    return path.label(), covered


def _run_chunk(cfg: ScenarioConfig, lo: int, hi: int):
    rules = rules_for(cfg)
    covered = 0
    labels = Counter()
    for i in range(lo, hi):
        label, ok = run_trial(cfg, rules, i)
        covered += int(ok)
        labels[label] += 1
    return covered, labels


def estimate_coverage(cfg: ScenarioConfig, workers: int = 1) -> CoverageEstimate:
    """Coverage probability with a 95% normal-approximation CI."""
    cfg.validate()
    n = cfg.n_realizations
    # Fixed chunking independent of the worker count keeps outputs
    # bit-identical across parallelism degrees.
    n_chunks = min(64, n)
    bounds = np.linspace(0, n, n_chunks + 1, dtype=int)
    chunks = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]

    covered = 0
    labels = Counter()
    if workers > 1 and len(chunks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_run_chunk, cfg, lo, hi) for lo, hi in chunks]
            for fut in futs:
                c, lb = fut.result()
                covered += c
                labels.update(lb)
    else:
        for lo, hi in chunks:
            c, lb = _run_chunk(cfg, lo, hi)
            covered += c
            labels.update(lb)

    p_hat = covered / n
    half = 1.96 * np.sqrt(p_hat * (1.0 - p_hat) / n)
    sample = [lb for lb, cnt in sorted(labels.items(), key=lambda kv: (kv[0] is None, kv[0]))
              for _ in range(cnt)]
    shares = path_share_histogram(sample, grammar=rules_for(cfg).path_grammar())
    return CoverageEstimate(p_hat, float(half), n, shares, cfg.master_seed)
