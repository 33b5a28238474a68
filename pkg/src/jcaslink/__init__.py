"""jcaslink: deterministic link-level simulator for a bistatic
joint-communications-and-sensing LEO satellite downlink.

Evaluates achievable communications rate and bistatic radar range-error
bounds over transmit power and antenna-count grids, and carries a registry
of satellite communication and spaceborne-radar frequency allocations.
"""

from ._version import __version__
from .errors import ConfigError, DomainError, PartitionOverflowError
from .geometry import (
    GeometryInputs,
    bistatic_range,
    doppler_shift,
    implied_altitude,
    orbital_speed,
    slant_range,
)
from .linkbudget import (
    ArrayGainModel,
    LinkResult,
    Scenario,
    array_gain_db,
    bistatic_radar_snr_db,
    comm_snr_db,
    fspl_db,
    monostatic_radar_snr_db,
    noise_power_dbw,
)
from .performance import (
    PerformanceResult,
    achievable_rate,
    delay_crlb,
    detection_feasible,
    range_mse,
)
from .spectrum import (
    BandRecord,
    PairingReport,
    PairingVerdict,
    ServiceKind,
    check_jcas_pairing,
    load_registry,
    lookup_comm_band,
    lookup_radar_allocations,
)
from .sweep import Mode, ResultTable, SweepSpec, emit_csv, run_point, run_sweep
from .waveform import (
    OfdmNumerology,
    SubcarrierPlan,
    TonePlacement,
    numerology,
    partition,
    sensing_rms_bandwidth,
    symbols_in,
)

__all__ = [
    "__version__",
    "ArrayGainModel",
    "BandRecord",
    "ConfigError",
    "DomainError",
    "GeometryInputs",
    "LinkResult",
    "Mode",
    "OfdmNumerology",
    "PairingReport",
    "PairingVerdict",
    "PartitionOverflowError",
    "PerformanceResult",
    "ResultTable",
    "Scenario",
    "ServiceKind",
    "SubcarrierPlan",
    "SweepSpec",
    "TonePlacement",
    "achievable_rate",
    "array_gain_db",
    "bistatic_radar_snr_db",
    "bistatic_range",
    "check_jcas_pairing",
    "comm_snr_db",
    "delay_crlb",
    "detection_feasible",
    "doppler_shift",
    "emit_csv",
    "fspl_db",
    "implied_altitude",
    "load_registry",
    "lookup_comm_band",
    "lookup_radar_allocations",
    "monostatic_radar_snr_db",
    "noise_power_dbw",
    "numerology",
    "orbital_speed",
    "partition",
    "range_mse",
    "run_point",
    "run_sweep",
    "sensing_rms_bandwidth",
    "slant_range",
    "symbols_in",
]
