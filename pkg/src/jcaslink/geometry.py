"""Spherical-Earth orbital geometry: slant ranges, circular-orbit speed,
Doppler shift, and bistatic range utilities.

All public functions take angles in degrees and distances in km unless the
name says otherwise. Everything is a pure function of its inputs.
"""

import math
from dataclasses import dataclass

from .constants import EARTH_RADIUS_KM, MU_EARTH, SPEED_OF_LIGHT
from .errors import DomainError

_EARTH_RADIUS_SQ = EARTH_RADIUS_KM * EARTH_RADIUS_KM


@dataclass(frozen=True)
class GeometryInputs:
    """Validated geometry of one link evaluation."""

    orbit_altitude_km: float
    elevation_user_deg: float
    elevation_target_deg: float
    earth_radius_km: float = EARTH_RADIUS_KM
    mu_earth: float = MU_EARTH

    def __post_init__(self):
        if self.orbit_altitude_km <= 0:
            raise DomainError("orbit_altitude_km must be > 0")
        for name in ("elevation_user_deg", "elevation_target_deg"):
            value = getattr(self, name)
            if not 0.0 <= value <= 90.0:
                raise DomainError(f"{name} must be within [0, 90] degrees")


def slant_range(altitude_km: float, elevation_deg: float) -> float:
    """Line-of-sight distance (km) to a satellite at the given altitude.

    Law-of-cosines inversion on the spherical Earth:

        d = -Re sin(e) + sqrt((Re sin(e))^2 + h^2 + 2 Re h)

    At e = 90 deg this reduces to the altitude itself.
    """
    if altitude_km <= 0:
        raise DomainError("altitude_km must be > 0")
    if not 0.0 <= elevation_deg <= 90.0:
        raise DomainError("elevation_deg must be within [0, 90] degrees")
    re_sin = EARTH_RADIUS_KM * math.sin(math.radians(elevation_deg))
    return -re_sin + math.sqrt(
        re_sin * re_sin + altitude_km * altitude_km + 2.0 * EARTH_RADIUS_KM * altitude_km
    )


def implied_altitude(slant_range_km: float, elevation_deg: float) -> float:
    """Altitude (km) whose slant range at the given elevation equals the input.

    Closed-form inverse of :func:`slant_range`; used as a per-link diagnostic
    when a scenario states distances rather than an orbit.
    """
    if slant_range_km <= 0:
        raise DomainError("slant_range_km must be > 0")
    if not 0.0 <= elevation_deg <= 90.0:
        raise DomainError("elevation_deg must be within [0, 90] degrees")
    sin_e = math.sin(math.radians(elevation_deg))
    return -EARTH_RADIUS_KM + math.sqrt(
        _EARTH_RADIUS_SQ
        + slant_range_km * slant_range_km
        + 2.0 * slant_range_km * EARTH_RADIUS_KM * sin_e
    )


def orbital_speed(altitude_km: float) -> float:
    """Circular-orbit speed in m/s: sqrt(mu / r) with r in metres.

    Accepts altitude 0 (surface-grazing reference orbit); strictly
    decreasing in altitude.
    """
    if altitude_km < 0:
        raise DomainError("altitude_km must be >= 0")
    return math.sqrt(MU_EARTH / ((EARTH_RADIUS_KM + altitude_km) * 1000.0))


def doppler_shift(carrier_hz: float, radial_speed_mps: float) -> float:
    """Signed Doppler shift in Hz: f * v / c (positive for closing motion)."""
    if carrier_hz <= 0:
        raise DomainError("carrier_hz must be > 0")
    return carrier_hz * radial_speed_mps / SPEED_OF_LIGHT


def bistatic_range(r_tx_target_km: float, r_target_rx_km: float) -> float:
    """Transmitter-target-receiver path-sum range in km."""
    if r_tx_target_km <= 0 or r_target_rx_km <= 0:
        raise DomainError("bistatic leg ranges must be > 0")
    return r_tx_target_km + r_target_rx_km
