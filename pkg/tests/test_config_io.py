import io
import json

import pytest

from pdcsim.config_io import (ConfigParseError, parse_config, parse_document,
                              record_columns, render_config, write_records)
from pdcsim.montecarlo import CoverageEstimate
from pdcsim.scenario import ScenarioConfig, Setup
from pdcsim.sweep import SweepRecord


def test_empty_document_gives_defaults():
    cfg, axes = parse_document("")
    assert cfg == ScenarioConfig()
    assert axes == {}


def test_basic_parsing_and_comments():
    cfg, axes = parse_document("""
        # a small-region scenario
        setup = small
        r_d_m = 2500          # meters
        n_m = 40
        lap_ideal_backhaul = true
        sweep.master_seed = 1, 2, 3
    """)
    assert cfg.setup == Setup.SMALL
    assert cfg.r_d_m == 2500.0
    assert cfg.n_m == 40
    assert cfg.lap_ideal_backhaul is True
    assert axes == {"master_seed": [1, 2, 3]}


def test_unknown_key_rejected():
    with pytest.raises(ConfigParseError) as exc:
        parse_document("speling = 3\n")
    assert "speling" in str(exc.value)


def test_duplicate_key_rejected():
    with pytest.raises(ConfigParseError):
        parse_document("r_d_m = 1\nr_d_m = 2\n")


def test_bad_value_reports_key_and_line():
    with pytest.raises(ConfigParseError) as exc:
        parse_document("setup = small\nn_m = lots\n")
    assert exc.value.key == "n_m"
    assert exc.value.line == 2


def test_invalid_config_value_reports_location():
    with pytest.raises(ConfigParseError) as exc:
        parse_document("tau_access = -1\n")
    assert exc.value.key == "tau_access"
    assert "tau_access" in str(exc.value)


def test_setup_fields_are_exclusive():
    with pytest.raises(ConfigParseError) as exc:
        parse_document("setup = large\nn_m = 10\n")
    assert "n_m" in str(exc.value)
    with pytest.raises(ConfigParseError):
        parse_document("setup = small\nh_s_m = 500000\n")
    with pytest.raises(ConfigParseError):
        parse_document("setup = large\nsweep.n_m = 0, 10\n")


def test_overrides_replace_document_values():
    cfg, axes = parse_document("r_d_m = 1000\n",
                               overrides=("r_d_m=5000", "master_seed=9"))
    assert cfg.r_d_m == 5000.0
    assert cfg.master_seed == 9
    with pytest.raises(ConfigParseError):
        parse_document("", overrides=("no_equals_sign",))


def test_round_trip():
    for cfg in (ScenarioConfig(),
                ScenarioConfig(setup=Setup.LARGE, r_d_m=15_000.0, h_h_m=20_000.0,
                               satellite_enabled=False, policy="all_tier"),
                ScenarioConfig(setup=Setup.SMALL, n_m=200, tau_backhaul=0.5,
                               user_radius_m=10.0)):
        assert parse_config(render_config(cfg)) == cfg


def make_record(**kw):
    shares = kw.pop("shares", {"user-tbs": 0.5, "user-hap-tbs": 0.25,
                               "user-hap-sat": 0.125, "outage": 0.125})
    cfg = ScenarioConfig(setup=Setup.LARGE, **kw)
    est = CoverageEstimate(0.4375, 0.0123456789, 1600, shares, cfg.master_seed)
    return SweepRecord({}, cfg, est)


def test_write_records_csv_layout():
    rec = make_record(r_d_m=10_000.0, master_seed=5)
    buf = io.StringIO()
    write_records([rec], buf, fmt="csv")
    lines = buf.getvalue().splitlines()
    assert lines[0].split(",") == list(record_columns([rec]))
    assert lines[0].startswith("setup,r_d_m,n_m,h_l_m,h_h_m,h_s_m,satellite,"
                               "policy,seed,n_real,coverage,ci95,outage_share")
    assert "share_user_hap_sat" in lines[0]
    row = dict(zip(lines[0].split(","), lines[1].split(",")))
    assert row["setup"] == "large"
    assert row["r_d_m"] == "10000"
    assert row["satellite"] == "true"
    assert row["coverage"] == "0.4375"
    assert row["outage_share"] == "0.125"
    assert buf.getvalue().endswith("\n") and not buf.getvalue().endswith("\n\n")


def test_write_records_byte_identical():
    a, b = io.StringIO(), io.StringIO()
    recs = [make_record(r_d_m=1000.0), make_record(r_d_m=2000.0, master_seed=3)]
    write_records(recs, a)
    write_records(recs, b)
    assert a.getvalue() == b.getvalue()


def test_write_records_header_only_when_empty():
    buf = io.StringIO()
    write_records([], buf, fmt="csv")
    assert buf.getvalue().splitlines() == [",".join(record_columns([]))]


def test_write_records_json():
    rec = make_record(r_d_m=10_000.0)
    buf = io.StringIO()
    write_records([rec], buf, fmt="json")
    rows = json.loads(buf.getvalue())
    assert len(rows) == 1
    assert rows[0]["setup"] == "large"
    assert rows[0]["coverage"] == pytest.approx(0.4375)
    assert rows[0]["satellite"] is True
    assert list(rows[0])[:3] == ["setup", "r_d_m", "n_m"]


def test_write_records_unknown_format():
    from pdcsim.scenario import ConfigError
    with pytest.raises(ConfigError):
        write_records([], io.StringIO(), fmt="parquet")
