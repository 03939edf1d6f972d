"""Hop-by-hop greedy path selection.

Starting at the user, each step picks the node maximizing average received
power among the tiers allowed by the setup's path grammar, until a
core-connected terminus is reached. The tier graph is acyclic so the walk
always terminates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .channel import Tier, link_class, mean_link_gains
from .scenario import Realization, ScenarioConfig, Setup


class NoPathAvailable(Exception):
    """A greedy step has no candidate successors; counted as outage upstream."""


class EmptySampleError(ValueError):
    """Histogram requested over an empty sample."""


class HopRole(enum.Enum):
    ACCESS = "access"
    BACKHAUL = "backhaul"


@dataclass(frozen=True)
class AdjacencyRules:
    """Allowed successor tiers per tier, plus the core-connected tiers."""

    setup: Setup
    successors: dict
    core_tiers: frozenset

    def path_grammar(self) -> list:
        """All tier sequences from the user to a core terminus, as labels."""
        words = []

        def walk(tier, prefix):
            if tier in self.core_tiers:
                words.append("-".join(prefix))
                return
            for nxt in self.successors.get(tier, ()):
                walk(nxt, prefix + [nxt.value])

        for first in self.successors[Tier.USER]:
            walk(first, ["user", first.value])
        return sorted(set(words))


def rules_for(cfg: ScenarioConfig) -> AdjacencyRules:
    if cfg.setup == Setup.SMALL:
        if cfg.lap_ideal_backhaul:
            # Literal reading of the path list: the LAP terminates a path.
            successors = {
                Tier.USER: (Tier.TBS, Tier.LAP, Tier.MDRU),
                Tier.MDRU: (Tier.TBS, Tier.LAP),
            }
            core = frozenset({Tier.TBS, Tier.LAP})
        else:
            successors = {
                Tier.USER: (Tier.TBS, Tier.LAP, Tier.MDRU),
                Tier.MDRU: (Tier.TBS, Tier.LAP),
                Tier.LAP: (Tier.TBS,),
            }
            core = frozenset({Tier.TBS})
        return AdjacencyRules(Setup.SMALL, successors, core)
    successors = {
        Tier.USER: (Tier.TBS, Tier.HAP),
        Tier.HAP: (Tier.TBS, Tier.SAT),
    }
    return AdjacencyRules(Setup.LARGE, successors, frozenset({Tier.TBS, Tier.SAT}))


@dataclass(frozen=True)
class Hop:
    """One downlink hop: tx transmits toward rx."""

    tx: tuple  # (Tier, index)
    rx: tuple
    role: HopRole


@dataclass(frozen=True)
class PathSpec:
    hops: tuple

    def tier_sequence(self):
        tiers = [self.hops[0].rx[0]] + [h.tx[0] for h in self.hops]
        return tuple(tiers)

    def label(self) -> str:
        return "-".join(t.value for t in self.tier_sequence())


def select_path(real: Realization, rules: AdjacencyRules) -> PathSpec:
    """Greedy max-average-received-power walk from the user to the core.

    Ties are broken toward the lowest global node id.
    """
    if real.cfg.setup != rules.setup:
        raise ValueError("realization and adjacency rules target different setups")
    cfg = real.cfg
    model = cfg.los_model()
    current = Realization.USER_REF
    hops = []
    while current[0] not in rules.core_tiers:
        rx_pos = real.pos(current)
        best = None  # (power, global_id, ref)
        for tier in rules.successors.get(current[0], ()):
            n = real.count(tier)
            if n == 0:
                continue
            cls = link_class(tier, current[0])
            gains = mean_link_gains(cfg.tier_params(cls), rx_pos, real.positions[tier],
                                    model, cfg.min_link_distance_m)
            powers = cfg.tier_params(tier).tx_power_w * cfg.ref_gain * gains
            i = int(np.argmax(powers))  # argmax returns the first (lowest) index on ties
            cand = (powers[i], -real.global_id((tier, i)), (tier, i))
            if best is None or cand > best:
                best = cand
        if best is None:
            raise NoPathAvailable(f"no candidate successors from tier {current[0].value}")
        nxt = best[2]
        role = HopRole.ACCESS if current[0] == Tier.USER else HopRole.BACKHAUL
        hops.append(Hop(tx=nxt, rx=current, role=role))
        current = nxt
    return PathSpec(tuple(hops))


def path_share_histogram(items, grammar=None) -> dict:
    """Fractions of each path type plus an outage bucket, summing to 1.

    `items` holds path labels, PathSpec objects, or None for outage.
    `grammar` optionally fixes the set (and order) of path-type keys.
    """
    items = list(items)
    if not items:
        raise EmptySampleError("cannot build a path-share histogram from an empty sample")
    labels = [it.label() if isinstance(it, PathSpec) else it for it in items]
    keys = list(grammar) if grammar is not None else sorted(
        {lb for lb in labels if lb is not None})
    shares = {k: 0.0 for k in keys}
    shares["outage"] = 0.0
    w = 1.0 / len(labels)
    for lb in labels:
        shares["outage" if lb is None else lb] += w
    return shares
