import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import hyp1f1

from pdcsim.fading import (ShadowedRicianParams, nakagami_power_gain,
                           shadowed_rician_power_gain)


def sr_pdf(x, p: ShadowedRicianParams):
    """Closed-form shadowed Rician power pdf, used as an independent oracle."""
    two_b = 2.0 * p.b0
    front = (two_b * p.m_sr / (two_b * p.m_sr + p.omega)) ** p.m_sr / two_b
    arg = p.omega * x / (two_b * (two_b * p.m_sr + p.omega))
    return front * np.exp(-x / two_b) * hyp1f1(p.m_sr, 1.0, arg)


def test_nakagami_rayleigh_tail():
    g = nakagami_power_gain(1.0, np.random.default_rng(10), size=1_000_000)
    p = np.mean(g > 1.0)
    expect = np.exp(-1.0)
    se = np.sqrt(expect * (1 - expect) / 1_000_000)
    assert abs(p - expect) < 3 * se


@pytest.mark.parametrize("m", [1.0, 2.0, 3.0])
def test_nakagami_moments(m):
    g = nakagami_power_gain(m, np.random.default_rng(int(m)), size=1_000_000)
    assert abs(g.mean() - 1.0) < 0.005
    assert abs(g.var() - 1.0 / m) / (1.0 / m) < 0.02
    assert np.all(g >= 0) and np.all(np.isfinite(g))


def test_nakagami_invalid_shape():
    with pytest.raises(ValueError):
        nakagami_power_gain(0.25, np.random.default_rng(0))


def test_shadowed_rician_mean_matches_pdf_oracle():
    p = ShadowedRicianParams()
    # independent check of the moment identity E|A|^2 = 2 b0 + omega
    mean_quad, _ = quad(lambda x: x * sr_pdf(x, p), 0.0, 60.0)
    assert mean_quad == pytest.approx(p.mean_power, rel=1e-6)
    mass, _ = quad(lambda x: sr_pdf(x, p), 0.0, 60.0)
    assert mass == pytest.approx(1.0, rel=1e-6)

    g = shadowed_rician_power_gain(p, np.random.default_rng(11), size=1_000_000)
    assert abs(g.mean() - p.mean_power) / p.mean_power < 0.02
    assert np.all(g >= 0) and np.all(np.isfinite(g))


def test_shadowed_rician_sample_cdf_matches_pdf_oracle():
    p = ShadowedRicianParams()
    g = shadowed_rician_power_gain(p, np.random.default_rng(12), size=200_000)
    for x in (0.5, 1.0, 2.0):
        expect, _ = quad(lambda t: sr_pdf(t, p), 0.0, x)
        emp = np.mean(g <= x)
        assert abs(emp - expect) < 0.005


def test_shadowed_rician_no_los_is_exponential():
    p = ShadowedRicianParams(b0=0.126, m_sr=10.1, omega=0.0)
    g = shadowed_rician_power_gain(p, np.random.default_rng(13), size=1_000_000)
    assert abs(g.mean() - 2 * p.b0) / (2 * p.b0) < 0.02
    # exponential tail check at one point
    x = 2 * p.b0
    assert abs(np.mean(g > x) - np.exp(-1.0)) < 0.005


def test_shadowed_rician_large_m_limit():
    p = ShadowedRicianParams(b0=0.126, m_sr=1e4, omega=0.835)
    g = shadowed_rician_power_gain(p, np.random.default_rng(14), size=1_000_000)
    assert abs(g.mean() - p.mean_power) / p.mean_power < 0.02


def test_shadowed_rician_invalid_params():
    with pytest.raises(ValueError):
        ShadowedRicianParams(b0=0.0)
    with pytest.raises(ValueError):
        ShadowedRicianParams(m_sr=-1.0)


def test_samplers_are_stream_deterministic():
    a = nakagami_power_gain(2.0, np.random.default_rng(99), size=16)
    b = nakagami_power_gain(2.0, np.random.default_rng(99), size=16)
    np.testing.assert_array_equal(a, b)
    p = ShadowedRicianParams()
    a = shadowed_rician_power_gain(p, np.random.default_rng(99), size=16)
    b = shadowed_rician_power_gain(p, np.random.default_rng(99), size=16)
    np.testing.assert_array_equal(a, b)
