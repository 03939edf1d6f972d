"""Per-link SINR and the end-to-end coverage predicate.

The infrastructure-side endpoint of every hop transmits (downlink
convention). Access and backhaul ride orthogonal bands; the interferer set
on a link's band is controlled by the policy:

  none       noise only
  same_tier  every node of the serving transmitter's tier except tx
  all_tier   every non-user node except tx (and except rx itself)

Thresholds are inclusive (SINR >= tau counts as covered).
"""

from __future__ import annotations

import enum

import numpy as np

from .channel import Tier, link_class, sampled_link_gains
from .scenario import Realization, TIER_ORDER
from .association import Hop, HopRole, PathSpec


class Policy(enum.Enum):
    NONE = "none"
    SAME_TIER = "same_tier"
    ALL_TIER = "all_tier"


def _received_powers(real: Realization, rx_ref, tx_tier: Tier) -> np.ndarray:
    """Instantaneous received power at rx from every node of tx_tier."""
    cfg = real.cfg
    los, gains = real.link_states(rx_ref, tx_tier)
    cls = link_class(tx_tier, rx_ref[0])
    pl = sampled_link_gains(cfg.tier_params(cls), real.pos(rx_ref),
                            real.positions[tx_tier], los, cfg.min_link_distance_m)
    return cfg.tier_params(tx_tier).tx_power_w * cfg.ref_gain * gains * pl


def link_sinr(hop: Hop, real: Realization, policy: Policy, noise_w: float) -> float:
    """SINR of one hop under the given interference policy."""
    tx_tier, tx_idx = hop.tx
    serving = _received_powers(real, hop.rx, tx_tier)
    signal = serving[tx_idx]
    interference = 0.0
    if policy == Policy.SAME_TIER:
        interference = float(np.sum(serving)) - float(signal)
    elif policy == Policy.ALL_TIER:
        for tier in TIER_ORDER:
            if real.count(tier) == 0:
                continue
            powers = serving if tier == tx_tier else _received_powers(real, hop.rx, tier)
            total = float(np.sum(powers))
            if tier == tx_tier:
                total -= float(signal)
            if tier == hop.rx[0]:  # a node does not interfere with itself as receiver
                total -= float(powers[hop.rx[1]])
            interference += total
    return float(signal) / (interference + noise_w)


def path_covered(path: PathSpec, real: Realization, policy: Policy,
                 tau_access: float, tau_backhaul: float, noise_w: float) -> bool:
    """True iff every hop meets its role's SINR threshold (inclusive)."""
    for hop in path.hops:
        tau = tau_access if hop.role == HopRole.ACCESS else tau_backhaul
        if link_sinr(hop, real, policy, noise_w) < tau:
            return False
    return True
