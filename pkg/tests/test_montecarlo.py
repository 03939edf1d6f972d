import numpy as np
import pytest

from pdcsim.montecarlo import estimate_coverage, run_trial, trial_rng
from pdcsim.association import rules_for
from pdcsim.scenario import ScenarioConfig, Setup


def test_trial_rng_independent_of_history():
    a = trial_rng(5, 17).random(4)
    b = trial_rng(5, 17).random(4)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(trial_rng(5, 18).random(4), a)
    assert not np.array_equal(trial_rng(6, 17).random(4), a)


def test_noise_limited_closed_form():
    # Single TBS pinned at distance d with Rayleigh fading and no
    # interference: P(cov) = exp(-tau sigma^2 d^alpha / p).
    d = 40_000.0
    cfg = ScenarioConfig(setup=Setup.SMALL, r_d_m=1000.0, n_m=0,
                         lap_enabled=False, user_radius_m=0.0,
                         pinned_tbs_distance_m=d, policy="none", n_realizations=20_000, master_seed=3)
    est = estimate_coverage(cfg)
    expect = np.exp(-cfg.tau_access * cfg.noise_w * d ** 2.9 / cfg.p_tbs_w)
    se = np.sqrt(expect * (1 - expect) / cfg.n_realizations)
    assert abs(est.p_hat - expect) < 3 * se
    assert est.path_shares["user-tbs"] == pytest.approx(1.0)


def test_no_infrastructure_means_zero_coverage():
    cfg = ScenarioConfig(setup=Setup.SMALL, r_d_m=1000.0, n_m=0,
                         lap_enabled=False, tbs_density_per_km2=1e-9,
                         n_realizations=200, master_seed=4)
    est = estimate_coverage(cfg)
    assert est.p_hat == 0.0
    assert est.path_shares["outage"] == pytest.approx(1.0)


def test_estimate_fields_and_ci():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0,
                         n_realizations=500, master_seed=5)
    est = estimate_coverage(cfg)
    assert est.n_realizations == 500
    assert est.master_seed == 5
    assert 0.0 <= est.p_hat <= 1.0
    expect = 1.96 * np.sqrt(est.p_hat * (1 - est.p_hat) / 500)
    assert est.ci95_half_width == pytest.approx(expect, rel=1e-12)
    assert sum(est.path_shares.values()) == pytest.approx(1.0)
    assert set(est.path_shares) == {"user-tbs", "user-hap-tbs", "user-hap-sat",
                                    "outage"}


def test_run_trial_is_deterministic():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=2000.0, master_seed=6)
    rules = rules_for(cfg)
    for i in range(20):
        assert run_trial(cfg, rules, i) == run_trial(cfg, rules, i)


def test_worker_count_does_not_change_estimate():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0,
                         n_realizations=256, master_seed=7)
    a = estimate_coverage(cfg, workers=1)
    b = estimate_coverage(cfg, workers=2)
    assert a.p_hat == b.p_hat
    assert a.path_shares == b.path_shares


def test_doubling_n_stays_within_cis():
    cfg = ScenarioConfig(setup=Setup.LARGE, r_d_m=1000.0,
                         n_realizations=1000, master_seed=8)
    a = estimate_coverage(cfg)
    b = estimate_coverage(cfg.with_values(n_realizations=2000))
    assert abs(a.p_hat - b.p_hat) <= a.ci95_half_width + b.ci95_half_width
