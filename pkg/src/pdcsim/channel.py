"""Deterministic link-budget layer.

LoS probability (elevation-angle sigmoid), power-law path loss, the
tier-class rule deciding which exponent pair governs a mixed link, and the
average received power that drives the association rule.

Path loss is pure d^-alpha with unity gain at 1 m; no carrier frequency or
reference loss is assumed. A global reference-gain multiplier is exposed
for experimentation (default 1). The urban sigmoid constants (a=9.61,
b=0.16) are configurable defaults taken from the standard A2G LoS model.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .geometry import as_xyz, distances_to, elevation_angles


class Tier(enum.Enum):
    USER = "user"
    MDRU = "mdru"
    TBS = "tbs"
    LAP = "lap"
    HAP = "hap"
    SAT = "sat"


# Hierarchy used to pick the exponent/fading class of a mixed link.
RANK = {Tier.USER: 0, Tier.MDRU: 1, Tier.TBS: 2, Tier.LAP: 3, Tier.HAP: 4, Tier.SAT: 5}

AERIAL_TIERS = frozenset({Tier.LAP, Tier.HAP, Tier.SAT})


@dataclass(frozen=True)
class TierParams:
    """Per-tier link parameters (exponents, power, fading shape, altitude)."""

    tier: Tier
    tx_power_w: float
    alpha_los: float
    alpha_nlos: float  # equal to alpha_los for tiers without a LoS/NLoS split
    nakagami_m: float
    altitude_m: float = 0.0

    def __post_init__(self):
        if self.tx_power_w <= 0:
            raise ValueError(f"tx_power must be > 0, got {self.tx_power_w}")
        if self.alpha_los < 2:
            raise ValueError(f"alpha_los must be >= 2, got {self.alpha_los}")
        if self.alpha_nlos < self.alpha_los:
            raise ValueError("alpha_nlos must be >= alpha_los")
        if self.nakagami_m < 0.5:
            raise ValueError(f"nakagami m must be >= 0.5, got {self.nakagami_m}")

    @property
    def has_los_split(self) -> bool:
        return self.alpha_nlos != self.alpha_los


@dataclass(frozen=True)
class LosModel:
    """Sigmoid LoS-probability model P(theta) = 1/(1 + a*exp(-b*(theta - a)))."""

    a: float = 9.61
    b: float = 0.16
    environment_label: str = "urban"

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ValueError("LoS model parameters a, b must be > 0")


def los_probability(model: LosModel, theta_deg):
    """LoS probability at elevation angle theta in [0, 90] degrees."""
    theta = np.asarray(theta_deg, dtype=float)
    if np.any(theta < 0) or np.any(theta > 90):
        raise ValueError("elevation angle must lie in [0, 90] degrees")
    p = 1.0 / (1.0 + model.a * np.exp(-model.b * (theta - model.a)))
    return float(p) if np.isscalar(theta_deg) else p


def path_loss_gain(alpha: float, d):
    """Power-law gain d^-alpha (unity at 1 m). d must be > 0."""
    d = np.asarray(d, dtype=float)
    if np.any(d <= 0):
        raise ValueError("path_loss_gain requires d > 0; clamp to a minimum link distance")
    g = d ** (-alpha)
    return float(g) if g.ndim == 0 else g


def link_class(tier_a: Tier, tier_b: Tier) -> Tier:
    """Tier class governing a link: the endpoint highest in the hierarchy."""
    if tier_a == tier_b and tier_a == Tier.USER:
        raise ValueError("a link needs at least one non-user endpoint")
    return tier_a if RANK[tier_a] >= RANK[tier_b] else tier_b


def mean_link_gains(class_params: TierParams, rx, positions: np.ndarray,
                    model: LosModel, min_distance_m: float = 1.0) -> np.ndarray:
    """Fading-averaged path gain from each of `positions` to `rx`.

    For classes with a LoS/NLoS split the gain is the sigmoid-weighted mix
    of both power laws; otherwise the single power law. Fading has unit
    mean so it does not appear.
    """
    d = np.maximum(distances_to(rx, positions), min_distance_m)
    if not class_params.has_los_split:
        return d ** (-class_params.alpha_los)
    theta = elevation_angles(rx, positions)
    p_los = los_probability(model, theta)
    return p_los * d ** (-class_params.alpha_los) + (1.0 - p_los) * d ** (-class_params.alpha_nlos)


def sampled_link_gains(class_params: TierParams, rx, positions: np.ndarray,
                       los: np.ndarray, min_distance_m: float = 1.0) -> np.ndarray:
    """Path gain per link given sampled per-link LoS states."""
    d = np.maximum(distances_to(rx, positions), min_distance_m)
    if not class_params.has_los_split:
        return d ** (-class_params.alpha_los)
    return np.where(los, d ** (-class_params.alpha_los), d ** (-class_params.alpha_nlos))


def avg_received_power(tx, rx, model: LosModel, *, ref_gain: float = 1.0,
                       min_distance_m: float = 1.0) -> float:
    """Average received power (watts) at rx from a transmitting node tx.

    tx and rx are node-like objects with .tier, .position and .params
    attributes; the downstream/serving endpoint transmits. The exponent
    pair comes from the link's class, the power from the transmitter.
    """
    cls = link_class(tx.tier, rx.tier)
    class_params = tx.params if cls == tx.tier else rx.params
    gains = mean_link_gains(class_params, as_xyz(rx.position),
                            as_xyz(tx.position)[None, :], model, min_distance_m)
    return float(tx.params.tx_power_w * ref_gain * gains[0])
