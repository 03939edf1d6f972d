"""Monte Carlo coverage simulator for post-disaster cellular networks.

Estimates end-to-end (access + wireless backhaul) coverage probability for
users inside a circular disaster region served by surviving terrestrial
base stations, deployable ground units, aerial platforms, and a LEO
satellite.
"""

__version__ = "0.1.0"

from .geometry import DiskRegion, Point3, distance3d, elevation_angle, sample_tbs_field, \
    sample_uniform_disk
from .channel import LosModel, Tier, TierParams, avg_received_power, link_class, \
    los_probability, path_loss_gain
from .fading import ShadowedRicianParams, nakagami_power_gain, shadowed_rician_power_gain
from .scenario import ConfigError, Node, Realization, ScenarioConfig, Setup, \
    build_large_disaster, build_small_disaster, build_realization
from .association import AdjacencyRules, NoPathAvailable, PathSpec, path_share_histogram, \
    rules_for, select_path
from .sinr import Policy, link_sinr, path_covered
from .montecarlo import CoverageEstimate, estimate_coverage
from .sweep import SweepRecord, optimal_n_m, run_sweep
from .config_io import parse_config, parse_document, render_config, write_records

__all__ = [
    "AdjacencyRules", "ConfigError", "CoverageEstimate", "DiskRegion", "LosModel",
    "Node", "NoPathAvailable", "PathSpec", "Point3", "Policy", "Realization",
    "ScenarioConfig", "Setup", "ShadowedRicianParams", "SweepRecord", "Tier",
    "TierParams", "avg_received_power", "build_large_disaster", "build_realization",
    "build_small_disaster", "distance3d", "elevation_angle", "estimate_coverage",
    "link_class", "link_sinr", "los_probability", "nakagami_power_gain", "optimal_n_m",
    "parse_config", "parse_document", "path_covered", "path_loss_gain",
    "path_share_histogram", "render_config", "rules_for", "run_sweep",
    "sample_tbs_field", "sample_uniform_disk", "select_path",
    "shadowed_rician_power_gain", "write_records",
]
