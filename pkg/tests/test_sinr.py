import numpy as np
import pytest

from pdcsim.association import Hop, HopRole, PathSpec
from pdcsim.channel import Tier
from pdcsim.scenario import Realization, ScenarioConfig, Setup
from pdcsim.sinr import Policy, link_sinr, path_covered

USER = Realization.USER_REF


def make_real(cfg, positions, user=(0.0, 0.0, 0.0), seed=0):
    pos = {t: np.asarray(p, dtype=float).reshape(-1, 3) for t, p in positions.items()}
    return Realization(cfg, np.asarray(user, dtype=float), pos,
                       np.random.default_rng(seed))


def pin_unit_fading(real):
    """Freeze every link draw at LoS with unit power gain."""
    for tier in real.tiers_present():
        n = real.count(tier)
        for rx in [USER] + [(t, i) for t in real.tiers_present()
                            for i in range(real.count(t))]:
            real.los_states[(rx, tier)] = np.ones(n, dtype=bool)
            real.fading_gains[(rx, tier)] = np.ones(n)


def test_noise_limited_cell_edge():
    # d chosen so that p d^-alpha / sigma^2 = tau = 0.1
    d = 67_206.0
    cfg = ScenarioConfig(setup=Setup.SMALL, r_d_m=1000.0)
    real = make_real(cfg, {Tier.TBS: [[d, 0.0, 0.0]]})
    pin_unit_fading(real)
    sinr = link_sinr(Hop((Tier.TBS, 0), USER, HopRole.ACCESS), real, Policy.NONE,
                     cfg.noise_w)
    assert sinr == pytest.approx(10 * d ** -2.9 / 1e-12, rel=1e-12)
    assert sinr == pytest.approx(0.1, rel=2e-3)


def test_two_equidistant_interferers_symmetry():
    cfg = ScenarioConfig(setup=Setup.SMALL, r_d_m=1000.0)
    real = make_real(cfg, {Tier.TBS: [[300.0, 0.0, 0.0], [-300.0, 0.0, 0.0]]})
    pin_unit_fading(real)
    hop = Hop((Tier.TBS, 0), USER, HopRole.ACCESS)
    s = 10 * 300.0 ** -2.9
    sinr = link_sinr(hop, real, Policy.SAME_TIER, cfg.noise_w)
    assert sinr == pytest.approx(s / (s + 1e-12), rel=1e-12)
    assert sinr < 1.0
    # noise -> 0 drives the symmetric SIR to 1
    assert link_sinr(hop, real, Policy.SAME_TIER, 1e-30) == pytest.approx(1.0, rel=1e-9)


def test_sinr_decreasing_in_distance():
    cfg = ScenarioConfig(setup=Setup.SMALL, r_d_m=1000.0)
    vals = []
    for d in (100.0, 300.0, 1000.0, 3000.0):
        real = make_real(cfg, {Tier.TBS: [[d, 0.0, 0.0]]})
        pin_unit_fading(real)
        vals.append(link_sinr(Hop((Tier.TBS, 0), USER, HopRole.ACCESS), real,
                              Policy.NONE, cfg.noise_w))
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_interference_never_helps():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0)
    real = make_real(cfg, {Tier.TBS: [[500.0, 0.0, 0.0], [900.0, 100.0, 0.0]],
                           Tier.HAP: [[0.0, 0.0, 10_000.0]],
                           Tier.SAT: [[0.0, 0.0, 5e5]]})
    pin_unit_fading(real)
    hop = Hop((Tier.TBS, 0), USER, HopRole.ACCESS)
    s_none = link_sinr(hop, real, Policy.NONE, cfg.noise_w)
    s_same = link_sinr(hop, real, Policy.SAME_TIER, cfg.noise_w)
    s_all = link_sinr(hop, real, Policy.ALL_TIER, cfg.noise_w)
    assert s_none >= s_same >= s_all
    assert s_same < s_none  # the second TBS actually interferes


def test_receiver_not_its_own_interferer():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0)
    real = make_real(cfg, {Tier.TBS: [[2000.0, 0.0, 0.0]],
                           Tier.HAP: [[0.0, 0.0, 10_000.0]],
                           Tier.SAT: [[0.0, 0.0, 5e5]]})
    pin_unit_fading(real)
    # satellite -> HAP backhaul under all_tier: interference comes from the
    # TBS only, never from the receiving HAP itself
    hop = Hop((Tier.SAT, 0), (Tier.HAP, 0), HopRole.BACKHAUL)
    s = 1000.0 * (5e5 - 1e4) ** -2.0
    i = 10.0 * (2000.0 ** 2 + 10_000.0 ** 2) ** (-2.2 / 2)
    got = link_sinr(hop, real, Policy.ALL_TIER, cfg.noise_w)
    assert got == pytest.approx(s / (i + 1e-12), rel=1e-9)


def test_path_covered_threshold_logic():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0)
    real = make_real(cfg, {Tier.TBS: [[1000.0, 0.0, 0.0]],
                           Tier.HAP: [[0.0, 0.0, 10_000.0]]})
    pin_unit_fading(real)
    path = PathSpec((Hop((Tier.HAP, 0), USER, HopRole.ACCESS),
                     Hop((Tier.TBS, 0), (Tier.HAP, 0), HopRole.BACKHAUL)))
    access = link_sinr(path.hops[0], real, Policy.NONE, cfg.noise_w)
    backhaul = link_sinr(path.hops[1], real, Policy.NONE, cfg.noise_w)
    # both hops pass at the default thresholds
    assert path_covered(path, real, Policy.NONE, 0.1, 0.2, cfg.noise_w)
    # an access threshold just above the achieved SINR fails the path
    assert not path_covered(path, real, Policy.NONE, access * 1.0001, 0.2, cfg.noise_w)
    # a backhaul threshold above the backhaul SINR fails the path
    assert not path_covered(path, real, Policy.NONE, 0.1, backhaul * 1.0001, cfg.noise_w)
    # thresholds are inclusive: equality counts as covered
    assert path_covered(path, real, Policy.NONE, access, backhaul, cfg.noise_w)


def test_user_hap_sat_path_has_huge_satellite_margin():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0)
    real = make_real(cfg, {Tier.HAP: [[0.0, 0.0, 10_000.0]],
                           Tier.SAT: [[0.0, 0.0, 5e5]]})
    pin_unit_fading(real)
    hop = Hop((Tier.SAT, 0), (Tier.HAP, 0), HopRole.BACKHAUL)
    sinr = link_sinr(hop, real, Policy.SAME_TIER, cfg.noise_w)
    assert sinr > 1e3  # the air-to-space backhaul is never the bottleneck
    path = PathSpec((Hop((Tier.HAP, 0), USER, HopRole.ACCESS), hop))
    assert path_covered(path, real, Policy.SAME_TIER, 0.1, 0.2, cfg.noise_w)


@pytest.mark.parametrize("setup,kw", [
    (Setup.SMALL, {"n_m": 5}),
    (Setup.LARGE, {}),
])
def test_policy_ordering_on_coverage(setup, kw):
    from pdcsim.montecarlo import estimate_coverage
    vals = []
    for policy in ("none", "same_tier", "all_tier"):
        cfg = ScenarioConfig(setup=setup, r_d_m=1500.0, policy=policy,
                             n_realizations=400, master_seed=77, **kw)
        vals.append(estimate_coverage(cfg).p_hat)
    assert vals[0] >= vals[1] >= vals[2]
