"""Configuration documents and result serialization.

The configuration format is a flat key = value document (one key per
line, '#' comments), chosen so an operator can diff and version it. Sweep
axes use the prefix "sweep.", e.g.:

    setup = small
    r_d_m = 10000
    sweep.n_m = 0, 100, 200

Records serialize to a delimited-text table (or JSON) with a fixed column
order and 10-significant-digit decimals, so equal (config, seed) runs
reproduce byte-identical files.
"""

from __future__ import annotations

import dataclasses
import json

from .association import rules_for
from .scenario import (CONFIG_FIELD_NAMES, LARGE_ONLY_FIELDS, SMALL_ONLY_FIELDS,
                       ConfigError, ScenarioConfig, Setup)


class ConfigParseError(ConfigError):
    def __init__(self, message, line=None, key=None):
        loc = f" (key {key!r}" + (f", line {line}" if line else "") + ")" if key else \
            (f" (line {line})" if line else "")
        super().__init__(message + loc)
        self.line = line
        self.key = key


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(ScenarioConfig)}

_BOOL_WORDS = {"true": True, "false": False}


def parse_value(key: str, raw: str, line: int = None):
    """Parse one raw value according to its configuration field type."""
    ftype = _FIELD_TYPES[key]
    raw = raw.strip()
    try:
        if ftype == "Setup" or key == "setup":
            return Setup(raw)
        if ftype == "bool":
            if raw.lower() not in _BOOL_WORDS:
                raise ValueError(f"expected true/false, got {raw!r}")
            return _BOOL_WORDS[raw.lower()]
        if ftype == "int":
            return int(raw)
        if ftype == "float":
            return float(raw)
        if ftype.startswith("float |") or ftype.endswith("| None"):
            return None if raw.lower() == "none" else float(raw)
        return raw  # str fields
    except ValueError as exc:
        raise ConfigParseError(f"bad value for {key}: {exc}", line, key) from exc


def _check_setup_fields(setup: Setup, explicit: dict):
    forbidden = LARGE_ONLY_FIELDS if setup == Setup.SMALL else SMALL_ONLY_FIELDS
    for key, line in explicit.items():
        base = key.removeprefix("sweep.")
        if base in forbidden:
            raise ConfigParseError(
                f"{base} is not a setup-{setup.value} field", line, key)


def parse_document(text: str, overrides=()):
    """Parse a configuration document plus optional key=value overrides.

    Returns (ScenarioConfig, axes) where axes maps sweep field names to
    value lists. Unknown keys are rejected; absent keys take defaults.
    """
    values = {}
    axes = {}
    explicit = {}

    def handle(key, raw, line):
        key = key.strip()
        is_axis = key.startswith("sweep.")
        base = key.removeprefix("sweep.")
        if base not in CONFIG_FIELD_NAMES:
            raise ConfigParseError(f"unknown configuration key {key!r}", line, key)
        if key in explicit:
            raise ConfigParseError(f"duplicate key {key!r}", line, key)
        explicit[key] = line
        if is_axis:
            parts = [p for p in raw.split(",") if p.strip()]
            if not parts:
                raise ConfigParseError(f"empty axis value list for {key!r}", line, key)
            axes[base] = [parse_value(base, p, line) for p in parts]
        else:
            values[base] = parse_value(base, raw, line)

    for lineno, rawline in enumerate(text.splitlines(), start=1):
        stripped = rawline.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigParseError(f"expected 'key = value', got {stripped!r}", lineno)
        key, raw = stripped.split("=", 1)
        handle(key, raw, lineno)

    for item in overrides:
        if "=" not in item:
            raise ConfigParseError(f"expected 'key=value' override, got {item!r}")
        key, raw = item.split("=", 1)
        key = key.strip()
        if key in explicit:
            del explicit[key]
            values.pop(key.removeprefix("sweep."), None)
        handle(key, raw, None)

    try:
        cfg = ScenarioConfig(**values).validate()
    except TypeError as exc:
        raise ConfigParseError(str(exc)) from exc
    except ConfigError as exc:
        # Attach the offending key's location when the message names it.
        for key, line in explicit.items():
            if key.removeprefix("sweep.") in str(exc):
                raise ConfigParseError(str(exc), line, key) from exc
        raise
    _check_setup_fields(cfg.setup, explicit)
    return cfg, axes


def parse_config(text: str) -> ScenarioConfig:
    """Parse a configuration document, ignoring any sweep axes."""
    cfg, _ = parse_document(text)
    return cfg


def render_value(v) -> str:
    if isinstance(v, Setup):
        return v.value
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return repr(v) if isinstance(v, float) else str(v)


def render_config(cfg: ScenarioConfig) -> str:
    """Render a config as a parseable document (round-trips exactly).

    Fields belonging to the other setup are omitted; they are only valid
    at their defaults anyway.
    """
    skip = LARGE_ONLY_FIELDS if cfg.setup == Setup.SMALL else SMALL_ONLY_FIELDS
    lines = [f"{f.name} = {render_value(getattr(cfg, f.name))}"
             for f in dataclasses.fields(cfg) if f.name not in skip]
    return "\n".join(lines) + "\n"


BASE_COLUMNS = ("setup", "r_d_m", "n_m", "h_l_m", "h_h_m", "h_s_m", "satellite",
                "policy", "seed", "n_real", "coverage", "ci95", "outage_share")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".10g")
    return str(v)


def record_row(record) -> dict:
    cfg, est = record.config, record.estimate
    row = {
        "setup": cfg.setup.value,
        "r_d_m": float(cfg.r_d_m),
        "n_m": cfg.n_m,
        "h_l_m": float(cfg.h_l_m),
        "h_h_m": float(cfg.h_h_m),
        "h_s_m": float(cfg.h_s_m),
        "satellite": cfg.satellite_enabled and cfg.setup == Setup.LARGE,
        "policy": cfg.policy,
        "seed": cfg.master_seed,
        "n_real": est.n_realizations,
        "coverage": est.p_hat,
        "ci95": est.ci95_half_width,
        "outage_share": est.path_shares.get("outage", 0.0),
    }
    for label in rules_for(cfg).path_grammar():
        row["share_" + label.replace("-", "_")] = est.path_shares.get(label, 0.0)
    return row


def record_columns(records) -> list:
    cols = list(BASE_COLUMNS)
    if records:
        cols += [c for c in record_row(records[0]) if c not in BASE_COLUMNS]
    return cols


def write_records(records, sink, fmt: str = "csv") -> None:
    """Serialize sweep records with a fixed column order and newline."""
    records = list(records)
    cols = record_columns(records)
    if fmt == "csv":
        sink.write(",".join(cols) + "\n")
        for rec in records:
            row = record_row(rec)
            sink.write(",".join(_fmt(row[c]) for c in cols) + "\n")
    elif fmt == "json":
        rows = []
        for rec in records:
            row = record_row(rec)
            rows.append({c: (float(_fmt(v)) if isinstance(v := row[c], float) else v)
                         for c in cols})
        sink.write(json.dumps(rows, indent=2) + "\n")
    else:
        raise ConfigError(f"unknown output format {fmt!r}")
