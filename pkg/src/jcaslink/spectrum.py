"""Registry of communication-satellite frequency bands and spaceborne-radar
active-sensing allocations, with lookups and a joint-use pairing check.

The registry ships as a plain-text database (``data/bands.txt``) compiled
into immutable records at load time. File schema, one record per line:

    service|band_letter|low_hz|high_hz|notes

``service`` is ``communications`` or ``active_sensing``; frequencies are
integer Hz. For communications rows the notes field is the free-text
applications column; for active_sensing rows it encodes the per-sensor
assigned bandwidths verbatim as ``sensor=range`` pairs joined by ``'; '``.
Blank sensor cells are absent rather than zero.

Frequencies are Hz internally; the public lookups accept GHz (and MHz for
occupied bandwidth) to match how the allocations are usually quoted.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DomainError

BAND_LETTERS = frozenset({"L", "S", "C", "X", "Ku", "K", "Ka", "Q-V", "P", "W", "G"})

SENSOR_KINDS = (
    "scatterometer",
    "altimeter",
    "sar",
    "precipitation_radar",
    "cloud_profile_radar",
)

_GHZ = 1e9
_MHZ = 1e6


class ServiceKind(Enum):
    COMMUNICATIONS = "communications"
    ACTIVE_SENSING = "active_sensing"


class PairingVerdict(Enum):
    COMM_ONLY = "comm_only"
    JCAS_COLOCATED = "jcas_colocated"
    UNALLOCATED = "unallocated"


@dataclass(frozen=True)
class BandRecord:
    """One allocation row: a service, a band letter and a frequency range."""

    service: ServiceKind
    band_letter: str
    freq_low_hz: int
    freq_high_hz: int
    applications: str = ""
    sensor_bandwidths: tuple[tuple[str, str], ...] | None = None

    def __post_init__(self):
        if self.band_letter not in BAND_LETTERS:
            raise DomainError(f"unknown band_letter {self.band_letter!r}")
        if not self.freq_low_hz < self.freq_high_hz:
            raise DomainError("freq_low_hz must be < freq_high_hz")
        has_sensors = self.sensor_bandwidths is not None
        if has_sensors != (self.service is ServiceKind.ACTIVE_SENSING):
            raise DomainError(
                "sensor_bandwidths must be present exactly for active_sensing records"
            )
        if has_sensors:
            for sensor, _ in self.sensor_bandwidths:
                if sensor not in SENSOR_KINDS:
                    raise DomainError(f"unknown sensor kind {sensor!r}")

    def contains_hz(self, freq_hz: float) -> bool:
        return self.freq_low_hz <= freq_hz <= self.freq_high_hz

    def overlaps_hz(self, low_hz: float, high_hz: float) -> bool:
        return low_hz <= self.freq_high_hz and high_hz >= self.freq_low_hz


@dataclass(frozen=True)
class PairingReport:
    """Join of the two tables around one carrier's occupied bandwidth."""

    carrier_in_comm_band: str | None
    overlapping_radar_allocations: tuple[BandRecord, ...]
    verdict: PairingVerdict


def parse_record(line: str) -> BandRecord:
    parts = line.split("|")
    if len(parts) != 5:
        raise DomainError(f"expected 5 '|'-separated fields, got {len(parts)}")
    service_raw, letter, low_raw, high_raw, notes = (p.strip() for p in parts)
    try:
        service = ServiceKind(service_raw)
    except ValueError:
        raise DomainError(f"unknown service {service_raw!r}") from None
    low_hz, high_hz = int(low_raw), int(high_raw)
    if service is ServiceKind.COMMUNICATIONS:
        return BandRecord(service, letter, low_hz, high_hz, applications=notes)
    sensors = tuple(
        (key.strip(), value.strip())
        for key, _, value in (item.partition("=") for item in notes.split("; "))
    )
    return BandRecord(service, letter, low_hz, high_hz, sensor_bandwidths=sensors)


def format_record(record: BandRecord) -> str:
    if record.service is ServiceKind.COMMUNICATIONS:
        notes = record.applications
    else:
        notes = "; ".join(f"{k}={v}" for k, v in record.sensor_bandwidths)
    return "|".join(
        (
            record.service.value,
            record.band_letter,
            str(record.freq_low_hz),
            str(record.freq_high_hz),
            notes,
        )
    )


def load_registry(path: str | Path | None = None) -> tuple[BandRecord, ...]:
    """Load band records from ``path``, or the packaged database by default.

    Lines that are blank or start with ``#`` are ignored. A malformed record
    raises DomainError naming the offending line.
    """
    if path is None:
        text = resources.files("jcaslink").joinpath("data/bands.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            records.append(parse_record(line))
        except (DomainError, ValueError) as exc:
            raise DomainError(f"band database line {lineno}: {exc}") from None
    return tuple(records)


def dump_registry(records: tuple[BandRecord, ...], path: str | Path) -> None:
    """Write records back out in the canonical one-record-per-line format."""
    lines = ["# service|band_letter|low_hz|high_hz|notes"]
    lines.extend(format_record(r) for r in records)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


@lru_cache(maxsize=1)
def default_registry() -> tuple[BandRecord, ...]:
    return load_registry()


def comm_records(
    registry: tuple[BandRecord, ...] | None = None,
) -> tuple[BandRecord, ...]:
    registry = default_registry() if registry is None else registry
    return tuple(r for r in registry if r.service is ServiceKind.COMMUNICATIONS)


def radar_records(
    registry: tuple[BandRecord, ...] | None = None,
) -> tuple[BandRecord, ...]:
    registry = default_registry() if registry is None else registry
    return tuple(r for r in registry if r.service is ServiceKind.ACTIVE_SENSING)


def lookup_comm_band(
    freq_ghz: float, registry: tuple[BandRecord, ...] | None = None
) -> BandRecord | None:
    """The communications band containing ``freq_ghz``, or None in a gap."""
    if freq_ghz <= 0:
        raise DomainError("freq_ghz must be > 0")
    freq_hz = freq_ghz * _GHZ
    for record in comm_records(registry):
        if record.contains_hz(freq_hz):
            return record
    return None


def lookup_radar_allocations(
    freq_low_ghz: float,
    freq_high_ghz: float,
    registry: tuple[BandRecord, ...] | None = None,
) -> tuple[BandRecord, ...]:
    """All active-sensing allocations intersecting the closed range, sorted
    by lower band edge."""
    if not freq_low_ghz < freq_high_ghz:
        raise DomainError("freq_low_ghz must be < freq_high_ghz")
    low_hz, high_hz = freq_low_ghz * _GHZ, freq_high_ghz * _GHZ
    hits = [r for r in radar_records(registry) if r.overlaps_hz(low_hz, high_hz)]
    hits.sort(key=lambda r: r.freq_low_hz)
    return tuple(hits)


def check_jcas_pairing(
    carrier_ghz: float,
    bandwidth_mhz: float,
    registry: tuple[BandRecord, ...] | None = None,
) -> PairingReport:
    """Classify a carrier and its occupied bandwidth against both tables.

    Verdict is ``jcas_colocated`` iff the carrier sits in a communications
    band and at least one radar allocation overlaps the occupied band;
    ``comm_only`` when only the communications match holds; ``unallocated``
    when no communications band contains the carrier.
    """
    if carrier_ghz <= 0:
        raise DomainError("carrier_ghz must be > 0")
    if bandwidth_mhz <= 0:
        raise DomainError("bandwidth_mhz must be > 0")
    half_ghz = bandwidth_mhz * _MHZ / _GHZ / 2.0
    comm = lookup_comm_band(carrier_ghz, registry)
    radar = lookup_radar_allocations(carrier_ghz - half_ghz, carrier_ghz + half_ghz, registry)
    if comm is None:
        verdict = PairingVerdict.UNALLOCATED
    elif radar:
        verdict = PairingVerdict.JCAS_COLOCATED
    else:
        verdict = PairingVerdict.COMM_ONLY
    return PairingReport(
        carrier_in_comm_band=None if comm is None else comm.band_letter,
        overlapping_radar_allocations=radar,
        verdict=verdict,
    )
