"""Grid evaluation over transmit power and antenna-element count, result
table assembly, and deterministic CSV emission.

Grid points are independent pure-function evaluations; the table imposes a
canonical (n_elements, tx_power) sort so output does not depend on
evaluation order or concurrency.
"""

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from math import isfinite
from pathlib import Path

from . import constants, geometry, linkbudget, performance, waveform
from ._version import __version__
from .errors import DomainError
from .linkbudget import LinkResult, Scenario
from .performance import PerformanceResult

CSV_COLUMNS = (
    "n_elements",
    "tx_power_dbw",
    "comm_snr_db",
    "shannon_rate_bps",
    "qpsk_capped_rate_bps",
    "radar_snr_single_db",
    "radar_snr_integrated_db",
    "range_mse_m2",
    "range_rmse_m",
    "detection_feasible",
    "mode",
)

DEFAULT_POWER_AXIS_DBW = (1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0)
DEFAULT_ELEMENT_AXIS = (1, 2, 4, 8, 16)


class Mode(Enum):
    """Which sensing leg drives the range-error and feasibility outputs.

    ``radar_monostatic`` selects the monostatic budget; every other mode
    uses the bistatic budget (the reference configuration). The label is
    recorded per row so emitted tables are self-describing.
    """

    COMM = "comm"
    RADAR_BISTATIC = "radar_bistatic"
    RADAR_MONOSTATIC = "radar_monostatic"
    ALL = "all"


@dataclass(frozen=True)
class SweepSpec:
    base: Scenario = Scenario()
    power_axis_dbw: tuple[float, ...] = DEFAULT_POWER_AXIS_DBW
    element_axis: tuple[int, ...] = DEFAULT_ELEMENT_AXIS
    mode: Mode = Mode.ALL

    def __post_init__(self):
        if not self.power_axis_dbw:
            raise DomainError("power_axis_dbw must be non-empty")
        if not self.element_axis:
            raise DomainError("element_axis must be non-empty")
        for p in self.power_axis_dbw:
            if not isfinite(p):
                raise DomainError("power_axis_dbw values must be finite")
        for n in self.element_axis:
            if n < 1:
                raise DomainError("element_axis values must be >= 1")


@dataclass(frozen=True)
class SweepRow:
    tx_power_dbw: float
    n_elements: int
    link: LinkResult
    perf: PerformanceResult


@dataclass(frozen=True)
class ResultTable:
    rows: tuple[SweepRow, ...]
    metadata: dict


def scenario_fingerprint(s: Scenario) -> str:
    """Deterministic digest over every scenario field and pinned constant."""
    payload = {
        name: (value.value if isinstance(value, Enum) else value)
        for name, value in s.field_values().items()
    }
    payload["_constants"] = _pinned_constants()
    blob = json.dumps(payload, sort_keys=True).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


def _pinned_constants() -> dict:
    return {
        "speed_of_light": constants.SPEED_OF_LIGHT,
        "boltzmann": constants.BOLTZMANN,
        "mu_earth": constants.MU_EARTH,
        "earth_radius_km": constants.EARTH_RADIUS_KM,
    }


def selected_radar_snrs(link: LinkResult, mode: Mode) -> tuple[float, float]:
    """(single, integrated) sensing SNR for the mode's radar configuration."""
    if mode is Mode.RADAR_MONOSTATIC:
        return link.mono_snr_single_db, link.mono_snr_integrated_db
    return link.radar_snr_single_db, link.radar_snr_integrated_db


def run_point(s: Scenario, mode: Mode = Mode.ALL) -> tuple[LinkResult, PerformanceResult]:
    """Evaluate one scenario point end to end.

    Composition is geometry -> waveform -> link budget -> performance and is
    fully deterministic. When ``doppler_precompensated`` is false, the
    orbital Doppler at the implied user-link altitude (full orbital speed,
    worst case) degrades every leg's SNR through the inter-carrier
    interference model before integration.
    """
    num = waveform.numerology(s.bandwidth_hz, s.n_subcarriers, s.n_cp)
    plan = waveform.partition(s.n_subcarriers, s.n_data, s.n_sense)

    implied_alt_km = geometry.implied_altitude(s.d_sat_user_km, s.elevation_user_deg)

    comm_snr = linkbudget.comm_snr_db(s)
    radar_rx = linkbudget.bistatic_received_power_dbw(s, plan)
    noise_sense = linkbudget.noise_power_dbw(s.noise_temp_k, plan.sense_fraction * s.bandwidth_hz)
    gain = linkbudget.integration_gain_db(s.t_integration_s, num)
    bi_single = radar_rx - noise_sense
    mono_single, _ = linkbudget.monostatic_radar_snr_db(s, plan, num)

    if not s.doppler_precompensated:
        doppler_hz = residual_doppler_hz(s)
        comm_snr = performance.ici_effective_snr_db(comm_snr, doppler_hz, num.subcarrier_spacing_hz)
        bi_single = performance.ici_effective_snr_db(bi_single, doppler_hz, num.subcarrier_spacing_hz)
        mono_single = performance.ici_effective_snr_db(mono_single, doppler_hz, num.subcarrier_spacing_hz)

    link = LinkResult(
        fspl_comm_db=linkbudget.fspl_db(s.carrier_hz, s.d_sat_user_km * 1000.0),
        noise_comm_dbw=linkbudget.noise_power_dbw(s.noise_temp_k, s.bandwidth_hz),
        comm_snr_db=comm_snr,
        radar_rx_power_dbw=radar_rx,
        noise_sense_dbw=noise_sense,
        radar_snr_single_db=bi_single,
        integration_gain_db=gain,
        radar_snr_integrated_db=bi_single + gain,
        mono_snr_single_db=mono_single,
        mono_snr_integrated_db=mono_single + gain,
        implied_altitude_diag_km=implied_alt_km,
    )

    _, post_snr = selected_radar_snrs(link, mode)
    rms_bw = waveform.sensing_rms_bandwidth(plan, num, s.tone_placement)
    variance = performance.delay_crlb(post_snr, rms_bw)
    mse, rmse = performance.range_mse(variance)
    shannon, capped = performance.achievable_rate(comm_snr, plan, num)
    perf = PerformanceResult(
        shannon_rate_bps=shannon,
        modulation_capped_rate_bps=capped,
        delay_variance_s2=variance,
        range_mse_m2=mse,
        range_rmse_m=rmse,
        detection_feasible=performance.detection_feasible(post_snr, s.detection_threshold_db),
    )
    return link, perf


def residual_doppler_hz(s: Scenario) -> float:
    """Worst-case user-link Doppler when precompensation is off: full
    orbital speed at the implied altitude, zero when the flag is set."""
    if s.doppler_precompensated:
        return 0.0
    alt_km = geometry.implied_altitude(s.d_sat_user_km, s.elevation_user_deg)
    return geometry.doppler_shift(s.carrier_hz, geometry.orbital_speed(alt_km))


def run_sweep(spec: SweepSpec, workers: int = 1) -> ResultTable:
    """Evaluate the full power x elements grid into a sorted ResultTable."""
    points = [
        (n, p, replace(spec.base, tx_power_dbw=p, n_elements=n))
        for n in spec.element_axis
        for p in spec.power_axis_dbw
    ]

    def evaluate(point):
        n, p, scenario = point
        try:
            link, perf = run_point(scenario, spec.mode)
        except DomainError as exc:
            raise DomainError(
                f"grid point (n_elements={n}, tx_power_dbw={p}): {exc}"
            ) from None
        return SweepRow(tx_power_dbw=p, n_elements=n, link=link, perf=perf)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate, points))
    else:
        rows = [evaluate(point) for point in points]
    rows.sort(key=lambda r: (r.n_elements, r.tx_power_dbw))

    metadata = {
        "tool": f"jcaslink {__version__}",
        "fingerprint": scenario_fingerprint(spec.base),
        "constants": ";".join(f"{k}={v!r}" for k, v in _pinned_constants().items()),
        "mode": spec.mode.value,
    }
    return ResultTable(rows=tuple(rows), metadata=metadata)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _row_cells(row: SweepRow, mode: Mode) -> tuple:
    single, integrated = selected_radar_snrs(row.link, mode)
    return (
        row.n_elements,
        row.tx_power_dbw,
        row.link.comm_snr_db,
        row.perf.shannon_rate_bps,
        row.perf.modulation_capped_rate_bps,
        single,
        integrated,
        row.perf.range_mse_m2,
        row.perf.range_rmse_m,
        row.perf.detection_feasible,
        mode.value,
    )


def emit_csv(table: ResultTable, destination: str | Path) -> None:
    """Write the table as CSV: '#' metadata lines, a header, one line per
    row, floats at 9 significant digits. Re-emission is byte-identical."""
    mode = Mode(table.metadata["mode"])
    lines = [f"# {key}={value}" for key, value in table.metadata.items()]
    lines.append(",".join(CSV_COLUMNS))
    for row in table.rows:
        lines.append(",".join(_fmt(cell) for cell in _row_cells(row, mode)))
    try:
        Path(destination).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {destination}: {exc}") from exc
