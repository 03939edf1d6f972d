"""Small-scale fading power-gain samplers.

Nakagami-m power gains (Gamma with unit mean) for all terrestrial/aerial
links, plus the shadowed Rician gain used on the HAP-satellite link. All
samplers are pure functions of the provided random stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ShadowedRicianParams:
    """Shadowed Rician parameters: 2*b0 is the scattered power, omega the
    mean LoS power and m_sr the severity of the LoS shadowing.

    The defaults (0.126, 10.1, 0.835) come from the satellite-channel
    literature and are configurable.
    """

    b0: float = 0.126
    m_sr: float = 10.1
    omega: float = 0.835

    def __post_init__(self):
        if self.b0 <= 0 or self.m_sr <= 0 or self.omega < 0:
            raise ValueError(f"invalid shadowed Rician params {self}")

    @property
    def mean_power(self) -> float:
        return 2.0 * self.b0 + self.omega


def nakagami_power_gain(m: float, rng: np.random.Generator, size=None):
    """Unit-mean Nakagami-m power gain: Gamma(shape=m, scale=1/m).

    m = 1 is Rayleigh fading.
    """
    if m < 0.5:
        raise ValueError(f"nakagami shape must be >= 0.5, got {m}")
    return rng.gamma(m, 1.0 / m, size=size)


def shadowed_rician_power_gain(p: ShadowedRicianParams, rng: np.random.Generator, size=None):
    """Shadowed Rician power gain |A|^2.

    A is a circularly symmetric scattered component with per-dimension
    variance b0 plus a LoS component whose amplitude is a Nakagami-m_sr
    envelope scaled to mean power omega. E|A|^2 = 2*b0 + omega.
    """
    shape = () if size is None else size
    scatter_re = rng.normal(0.0, np.sqrt(p.b0), size=shape)
    scatter_im = rng.normal(0.0, np.sqrt(p.b0), size=shape)
    # Gamma(m, omega/m) is the shadowed LoS power; the scatter term is
    # circularly symmetric so the LoS phase can be taken as zero.
    los_amp = np.sqrt(rng.gamma(p.m_sr, p.omega / p.m_sr, size=shape)) if p.omega > 0 \
        else np.zeros(shape)
    g = (scatter_re + los_amp) ** 2 + scatter_im ** 2
    return float(g) if size is None else g
