"""Scenario configuration and per-trial network realizations.

Setup "small" (small disasters): one LAP above the epicenter plus a fixed
number of MDRUs inside the disaster disk. Setup "large" (large disasters):
one HAP above the epicenter plus optionally one LEO satellite. Both share
the surviving-TBS annulus and a user resampled uniformly over the disk.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields, replace

import numpy as np

from . import geometry
from .channel import AERIAL_TIERS, Tier, TierParams, LosModel, link_class, los_probability
from .fading import ShadowedRicianParams, nakagami_power_gain, shadowed_rician_power_gain


class ConfigError(ValueError):
    """Invalid configuration value or combination."""


class Setup(enum.Enum):
    SMALL = "small"
    LARGE = "large"


# Configuration fields that only make sense for one of the two setups.
SMALL_ONLY_FIELDS = ("n_m", "h_l_m", "lap_enabled")
LARGE_ONLY_FIELDS = ("h_h_m", "h_s_m", "satellite_enabled")


@dataclass(frozen=True)
class ScenarioConfig:
    """Full simulation configuration; defaults follow the main parameter table."""

    setup: Setup = Setup.SMALL
    r_d_m: float = 1000.0

    # setup "small"
    n_m: int = 0
    h_l_m: float = 200.0
    lap_enabled: bool = True

    # setup "large"
    h_h_m: float = 10_000.0
    h_s_m: float = 500_000.0
    satellite_enabled: bool = True

    # surviving terrestrial infrastructure
    tbs_density_per_km2: float = 10.0
    tbs_fixed_count: bool = False
    r_s_margin_m: float = 3000.0  # simulation radius r_s = r_d + margin

    # transmit powers [W]
    p_tbs_w: float = 10.0
    p_mdru_w: float = 10.0
    p_lap_w: float = 3.0
    p_hap_w: float = 20.0
    p_sat_w: float = 1000.0

    # path loss exponents
    alpha_mdru: float = 3.0
    alpha_tbs: float = 2.9
    alpha_lap_los: float = 2.5
    alpha_lap_nlos: float = 3.0
    alpha_hap_los: float = 2.2
    alpha_hap_nlos: float = 3.0
    alpha_sat: float = 2.0

    # Nakagami shape parameters
    m_tbs: float = 1.0
    m_mdru: float = 1.0
    m_lap: float = 2.0
    m_hap: float = 3.0
    m_sat: float = 3.0  # fallback when sat_fading = "nakagami"

    # satellite-link fading: "shadowed_rician" (text reading) or "nakagami"
    sat_fading: str = "shadowed_rician"
    sr_b0: float = 0.126
    sr_m: float = 10.1
    sr_omega: float = 0.835

    # A2G LoS sigmoid (urban defaults from the standard A2G model)
    los_a: float = 9.61
    los_b: float = 0.16
    environment: str = "urban"

    # SINR evaluation
    tau_access: float = 0.1
    tau_backhaul: float = 0.2
    noise_w: float = 1e-12
    policy: str = "same_tier"  # none | same_tier | all_tier
    lap_ideal_backhaul: bool = False
    ref_gain: float = 1.0
    min_link_distance_m: float = 1.0

    # Monte Carlo
    n_realizations: int = 20_000
    master_seed: int = 1

    # diagnostics: pin the user at a fixed radius / replace the TBS field
    # by a single TBS at (d, 0, 0)
    user_radius_m: float | None = None
    pinned_tbs_distance_m: float | None = None

    @property
    def r_s_m(self) -> float:
        return self.r_d_m + self.r_s_margin_m

    def validate(self) -> "ScenarioConfig":
        if self.r_d_m <= 0:
            raise ConfigError(f"r_d_m must be > 0, got {self.r_d_m}")
        if self.n_m < 0:
            raise ConfigError(f"n_m must be >= 0, got {self.n_m}")
        if self.r_s_margin_m <= 0:
            raise ConfigError("r_s_margin_m must be > 0")
        if self.tbs_density_per_km2 <= 0:
            raise ConfigError("tbs_density_per_km2 must be > 0")
        if self.tau_access <= 0:
            raise ConfigError(f"tau_access must be > 0, got {self.tau_access}")
        if self.tau_backhaul <= 0:
            raise ConfigError(f"tau_backhaul must be > 0, got {self.tau_backhaul}")
        if self.noise_w <= 0:
            raise ConfigError("noise_w must be > 0")
        if self.policy not in ("none", "same_tier", "all_tier"):
            raise ConfigError(f"unknown interference policy {self.policy!r}")
        if self.sat_fading not in ("shadowed_rician", "nakagami"):
            raise ConfigError(f"unknown sat_fading mode {self.sat_fading!r}")
        if self.n_realizations <= 0:
            raise ConfigError("n_realizations must be > 0")
        if self.ref_gain <= 0:
            raise ConfigError("ref_gain must be > 0")
        if self.min_link_distance_m <= 0:
            raise ConfigError("min_link_distance_m must be > 0")
        if self.user_radius_m is not None and not 0 <= self.user_radius_m <= self.r_d_m:
            raise ConfigError("user_radius_m must lie in [0, r_d_m]")
        for alt_name in ("h_l_m", "h_h_m", "h_s_m"):
            if getattr(self, alt_name) <= 0:
                raise ConfigError(f"{alt_name} must be > 0")
        # Constructing the per-tier params raises on invariant violations
        # (powers, exponents, shapes).
        try:
            for tier in (Tier.TBS, Tier.MDRU, Tier.LAP, Tier.HAP, Tier.SAT):
                self.tier_params(tier)
            self.sr_params()
            self.los_model()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return self

    def tier_params(self, tier: Tier) -> TierParams:
        if tier == Tier.TBS:
            return TierParams(tier, self.p_tbs_w, self.alpha_tbs, self.alpha_tbs, self.m_tbs)
        if tier == Tier.MDRU:
            return TierParams(tier, self.p_mdru_w, self.alpha_mdru, self.alpha_mdru, self.m_mdru)
        if tier == Tier.LAP:
            return TierParams(tier, self.p_lap_w, self.alpha_lap_los, self.alpha_lap_nlos,
                              self.m_lap, self.h_l_m)
        if tier == Tier.HAP:
            return TierParams(tier, self.p_hap_w, self.alpha_hap_los, self.alpha_hap_nlos,
                              self.m_hap, self.h_h_m)
        if tier == Tier.SAT:
            return TierParams(tier, self.p_sat_w, self.alpha_sat, self.alpha_sat,
                              self.m_sat, self.h_s_m)
        raise ValueError(f"no tier parameters for {tier}")

    def sr_params(self) -> ShadowedRicianParams:
        return ShadowedRicianParams(self.sr_b0, self.sr_m, self.sr_omega)

    def los_model(self) -> LosModel:
        return LosModel(self.los_a, self.los_b, self.environment)

    def with_values(self, **kwargs) -> "ScenarioConfig":
        return replace(self, **kwargs).validate()


CONFIG_FIELD_NAMES = tuple(f.name for f in fields(ScenarioConfig))

CORE_TIERS_BASE = frozenset({Tier.TBS, Tier.SAT})

# Canonical per-tier ordering used for global node ids and draw order.
TIER_ORDER = (Tier.TBS, Tier.MDRU, Tier.LAP, Tier.HAP, Tier.SAT)


@dataclass(frozen=True)
class Node:
    """One transmitter/receiver in a realization."""

    id: int
    tier: Tier
    position: np.ndarray
    params: TierParams
    core_connected: bool


@dataclass
class Realization:
    """One sampled network instance plus its per-link channel draws.

    LoS states and fading gains are drawn lazily, once per consumed link,
    from the realization's own random stream; repeated queries return the
    recorded values. Draw order is canonicalized by the SINR engine, so a
    given (config, seed) always reproduces the same draws.
    """

    cfg: ScenarioConfig
    user: np.ndarray
    positions: dict  # Tier -> (n, 3) ndarray
    rng: np.random.Generator
    los_states: dict = field(default_factory=dict)   # (rx_ref, tx_tier) -> bool array
    fading_gains: dict = field(default_factory=dict)  # (rx_ref, tx_tier) -> gain array

    USER_REF = (Tier.USER, 0)

    def count(self, tier: Tier) -> int:
        return len(self.positions.get(tier, ()))

    def tiers_present(self):
        return [t for t in TIER_ORDER if self.count(t) > 0]

    def pos(self, ref) -> np.ndarray:
        tier, idx = ref
        if tier == Tier.USER:
            return self.user
        return self.positions[tier][idx]

    def global_id(self, ref) -> int:
        tier, idx = ref
        offset = 0
        for t in TIER_ORDER:
            if t == tier:
                return offset + idx
            offset += self.count(t)
        raise KeyError(tier)

    def node(self, ref) -> Node:
        tier, idx = ref
        core = tier in CORE_TIERS_BASE or (tier == Tier.LAP and self.cfg.lap_ideal_backhaul)
        return Node(self.global_id(ref), tier, self.pos(ref),
                    self.cfg.tier_params(tier), core)

    def nodes(self) -> list:
        return [self.node((t, i)) for t in self.tiers_present()
                for i in range(self.count(t))]

    def link_states(self, rx_ref, tx_tier: Tier):
        """LoS flags and fading gains for every tx_tier node toward rx_ref.

        Drawn on first request and recorded; the fading shape and the
        LoS/NLoS split follow the link's tier class. The satellite link
        uses shadowed Rician fading unless sat_fading = "nakagami".
        """
        key = (rx_ref, tx_tier)
        if key in self.fading_gains:
            return self.los_states[key], self.fading_gains[key]

        n = self.count(tx_tier)
        cls = link_class(tx_tier, rx_ref[0])
        class_params = self.cfg.tier_params(cls)
        if class_params.has_los_split:
            theta = geometry.elevation_angles(self.pos(rx_ref), self.positions[tx_tier])
            p_los = los_probability(self.cfg.los_model(), theta)
            los = self.rng.random(n) < p_los
        else:
            los = np.ones(n, dtype=bool)
        if cls == Tier.SAT and self.cfg.sat_fading == "shadowed_rician":
            gains = shadowed_rician_power_gain(self.cfg.sr_params(), self.rng, size=n)
        else:
            gains = nakagami_power_gain(class_params.nakagami_m, self.rng, size=n)
        self.los_states[key] = los
        self.fading_gains[key] = gains
        return los, gains


def _sample_user(cfg: ScenarioConfig, rng: np.random.Generator) -> np.ndarray:
    if cfg.user_radius_m is not None:
        return np.array([cfg.user_radius_m, 0.0, 0.0])
    return geometry.disk_xy(rng, cfg.r_d_m, 1)[0]


def _sample_tbs(cfg: ScenarioConfig, rng: np.random.Generator) -> np.ndarray:
    if cfg.pinned_tbs_distance_m is not None:
        return np.array([[cfg.pinned_tbs_distance_m, 0.0, 0.0]])
    return geometry.sample_tbs_field(rng, cfg.r_d_m, cfg.r_s_m,
                                     cfg.tbs_density_per_km2, cfg.tbs_fixed_count)


def build_small_disaster(cfg: ScenarioConfig, rng: np.random.Generator) -> Realization:
    """One realization of the small-disaster setup (LAP + MDRUs + TBS annulus)."""
    if cfg.setup != Setup.SMALL:
        raise ConfigError("build_small_disaster requires setup = small")
    positions = {Tier.TBS: _sample_tbs(cfg, rng)}
    mdru = geometry.disk_xy(rng, cfg.r_d_m, cfg.n_m)
    if cfg.n_m > 0:
        positions[Tier.MDRU] = mdru
    if cfg.lap_enabled:
        positions[Tier.LAP] = np.array([[0.0, 0.0, cfg.h_l_m]])
    user = _sample_user(cfg, rng)
    return Realization(cfg, user, positions, rng)


def build_large_disaster(cfg: ScenarioConfig, rng: np.random.Generator) -> Realization:
    """One realization of the large-disaster setup (HAP + optional satellite)."""
    if cfg.setup != Setup.LARGE:
        raise ConfigError("build_large_disaster requires setup = large")
    positions = {
        Tier.TBS: _sample_tbs(cfg, rng),
        Tier.HAP: np.array([[0.0, 0.0, cfg.h_h_m]]),
    }
    if cfg.satellite_enabled:
        positions[Tier.SAT] = np.array([[0.0, 0.0, cfg.h_s_m]])
    user = _sample_user(cfg, rng)
    return Realization(cfg, user, positions, rng)


def build_realization(cfg: ScenarioConfig, rng: np.random.Generator) -> Realization:
    if cfg.setup == Setup.SMALL:
        return build_small_disaster(cfg, rng)
    return build_large_disaster(cfg, rng)
