"""Pinned physical constants. Every module uses these values and no others,
so identical inputs give bit-identical outputs."""

SPEED_OF_LIGHT = 299_792_458.0  # m/s
BOLTZMANN = 1.380649e-23  # J/K
MU_EARTH = 3.986004418e14  # m^3/s^2
EARTH_RADIUS_KM = 6371.0  # mean spherical radius
