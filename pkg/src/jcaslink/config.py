"""Flat key=value configuration documents and command-line overrides.

A document is one ``key = value`` assignment per line with ``#`` comment
lines; keys mirror the Scenario and SweepSpec field names. Parsing is
total: every document yields a value dict or a line-numbered ConfigError.
Omitted keys keep the reference-scenario defaults.
"""

from pathlib import Path

from .errors import ConfigError
from .linkbudget import ArrayGainModel, Scenario
from .sweep import Mode, SweepSpec
from .waveform import TonePlacement


def _parse_float(raw: str) -> float:
    return float(raw)


def _parse_int(raw: str) -> int:
    return int(raw)


def _parse_bool(raw: str) -> bool:
    lowered = raw.lower()
    if lowered == "true":
        return True
    if lowered == "false":
        return False
    raise ValueError("expected 'true' or 'false'")


def _parse_enum(enum_cls):
    def parse(raw: str):
        try:
            return enum_cls(raw)
        except ValueError:
            allowed = ", ".join(member.value for member in enum_cls)
            raise ValueError(f"expected one of: {allowed}") from None

    return parse


def _parse_float_list(raw: str) -> tuple[float, ...]:
    return tuple(float(item.strip()) for item in raw.split(","))


def _parse_int_list(raw: str) -> tuple[int, ...]:
    return tuple(int(item.strip()) for item in raw.split(","))


SCENARIO_PARSERS = {
    "carrier_hz": _parse_float,
    "bandwidth_hz": _parse_float,
    "n_subcarriers": _parse_int,
    "n_data": _parse_int,
    "n_sense": _parse_int,
    "n_cp": _parse_int,
    "tx_power_dbw": _parse_float,
    "tx_gain_ref_dbi": _parse_float,
    "rx_gain_dbi": _parse_float,
    "n_elements": _parse_int,
    "n_elements_ref": _parse_int,
    "d_sat_user_km": _parse_float,
    "d_sat_target_km": _parse_float,
    "d_target_rx_km": _parse_float,
    "rcs_m2": _parse_float,
    "t_integration_s": _parse_float,
    "noise_temp_k": _parse_float,
    "elevation_user_deg": _parse_float,
    "elevation_target_deg": _parse_float,
    "doppler_precompensated": _parse_bool,
    "detection_threshold_db": _parse_float,
    "tone_placement": _parse_enum(TonePlacement),
    "array_gain_model": _parse_enum(ArrayGainModel),
    "rx_gain_comm_dbi": _parse_float,
    "rx_gain_sense_dbi": _parse_float,
}

SWEEP_PARSERS = {
    "power_axis_dbw": _parse_float_list,
    "element_axis": _parse_int_list,
    "mode": _parse_enum(Mode),
}

ALL_PARSERS = {**SCENARIO_PARSERS, **SWEEP_PARSERS}


def _parse_assignment(text: str, line: int | None) -> tuple[str, object]:
    key, sep, raw = text.partition("=")
    if not sep:
        raise ConfigError(f"expected 'key = value', got {text!r}", line)
    key, raw = key.strip(), raw.strip()
    parser = ALL_PARSERS.get(key)
    if parser is None:
        raise ConfigError(f"unknown key {key!r}", line)
    try:
        return key, parser(raw)
    except ValueError as exc:
        raise ConfigError(f"invalid value for {key!r}: {exc}", line) from None


def parse_config_text(text: str) -> dict:
    """Parse a config document into a key -> typed-value dict."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, value = _parse_assignment(line, lineno)
        values[key] = value
    return values


def parse_config_file(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    return parse_config_text(text)


def parse_overrides(pairs: list[str]) -> dict:
    """Parse repeated ``key=value`` overrides (no line numbers)."""
    values = {}
    for pair in pairs:
        key, value = _parse_assignment(pair, None)
        values[key] = value
    return values


def effective_values(config_path: str | Path | None, overrides: list[str]) -> dict:
    """Merge precedence: overrides beat config-file values beat defaults."""
    values = {} if config_path is None else parse_config_file(config_path)
    values.update(parse_overrides(overrides))
    return values


def scenario_from_values(values: dict) -> Scenario:
    kwargs = {key: value for key, value in values.items() if key in SCENARIO_PARSERS}
    return Scenario(**kwargs)


def sweep_spec_from_values(values: dict) -> SweepSpec:
    kwargs = {key: value for key, value in values.items() if key in SWEEP_PARSERS}
    return SweepSpec(base=scenario_from_values(values), **kwargs)
