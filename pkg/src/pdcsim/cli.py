"""Command-line interface.

Subcommands:
  run       one coverage estimate from a config document
  sweep     a parameter-sweep grid (axes given via sweep.* keys)
  oracle    analytic-oracle self-test suite
  defaults  print the default configuration document

Exit codes: 0 success, 1 configuration error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import io
import json
import os
import sys

import numpy as np

from . import __version__
from .config_io import parse_document, render_config, write_records
from .fading import ShadowedRicianParams, nakagami_power_gain, shadowed_rician_power_gain
from .montecarlo import estimate_coverage
from .scenario import ConfigError, ScenarioConfig, Setup
from .sweep import SweepRecord, run_sweep


def _add_common(p):
    p.add_argument("--config", help="path to a key = value configuration document")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--seed", type=int, help="override the master seed")
    p.add_argument("--threads", default=None,
                   help="worker count or 'auto' (falls back to PDCSIM_THREADS, then 1)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                   help="override a single configuration key (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pdcsim", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("run", "sweep"):
        _add_common(sub.add_parser(name))
    sub.add_parser("oracle")
    pd = sub.add_parser("defaults")
    pd.add_argument("--setup", choices=("small", "large"), default="small")
    return ap


def _thread_count(arg) -> int:
    raw = arg if arg is not None else os.environ.get("PDCSIM_THREADS", "1")
    if str(raw) == "auto":
        return os.cpu_count() or 1
    n = int(raw)
    if n < 1:
        raise ConfigError(f"thread count must be >= 1, got {n}")
    return n


def _load(args):
    text = ""
    if args.config:
        with open(args.config, "r", encoding="utf-8") as f:
            text = f.read()
    cfg, axes = parse_document(text, overrides=args.set)
    if args.seed is not None:
        cfg = cfg.with_values(master_seed=args.seed)
    return cfg, axes


def _emit(records, cfg, args):
    buf = io.StringIO()
    write_records(records, buf, args.format)
    payload = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            f.write(payload)
        manifest = {
            "tool_version": __version__,
            "config": render_config(cfg),
            "master_seed": cfg.master_seed,
            "started_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            "output_sha256": hashlib.sha256(payload.encode()).hexdigest(),
        }
        with open(args.out + ".manifest.json", "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2)
            f.write("\n")
    else:
        sys.stdout.write(payload)


def cmd_run(args) -> int:
    cfg, _ = _load(args)
    est = estimate_coverage(cfg, workers=_thread_count(args.threads))
    _emit([SweepRecord({}, cfg, est)], cfg, args)
    return 0


def cmd_sweep(args) -> int:
    cfg, axes = _load(args)
    records = run_sweep(cfg, axes, workers=_thread_count(args.threads))
    _emit(records, cfg, args)
    return 0


def cmd_defaults(args) -> int:
    sys.stdout.write(render_config(ScenarioConfig(setup=Setup(args.setup))))
    return 0


def cmd_oracle(_args) -> int:
    """Quick self-checks against closed-form results."""
    failures = 0

    def check(name, ok, detail):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
        failures += 0 if ok else 1

    rng = np.random.default_rng(2024)
    for m in (1.0, 2.0, 3.0):
        g = nakagami_power_gain(m, rng, size=1_000_000)
        check(f"nakagami m={m:g} unit mean", abs(g.mean() - 1.0) < 5e-3,
              f"mean={g.mean():.5f}")
    p = ShadowedRicianParams()
    g = shadowed_rician_power_gain(p, rng, size=1_000_000)
    check("shadowed rician mean = 2*b0 + omega",
          abs(g.mean() - p.mean_power) / p.mean_power < 0.02,
          f"mean={g.mean():.5f} expected={p.mean_power:.5f}")

    # Noise-limited Rayleigh link: coverage = exp(-tau sigma^2 d^alpha / p)
    d = 67_206.0
    cfg = ScenarioConfig(setup=Setup.SMALL, r_d_m=1000.0, n_m=0, lap_enabled=False,
                         policy="none", user_radius_m=0.0, pinned_tbs_distance_m=d,
                         n_realizations=20_000, master_seed=7)
    est = estimate_coverage(cfg)
    expect = float(np.exp(-cfg.tau_access * cfg.noise_w * d ** cfg.alpha_tbs / cfg.p_tbs_w))
    se = np.sqrt(expect * (1 - expect) / cfg.n_realizations)
    check("noise-limited Rayleigh coverage", abs(est.p_hat - expect) < 3 * se,
          f"p_hat={est.p_hat:.4f} expected={expect:.4f}")

    return 0 if failures == 0 else 2


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": cmd_run, "sweep": cmd_sweep,
               "oracle": cmd_oracle, "defaults": cmd_defaults}[args.command]
    try:
        return handler(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
