"""Rotated-pole coordinate transformation.

Regional climate grids place their coordinate system relative to an
artificially relocated pole. Mapping a geographic point into that frame is
a pure spherical rotation:

    lat_rot = asin(sin(lat) sin(lat_p) + cos(lat) cos(lat_p) cos(dlon))
    lon_rot = lon_p + atan2(cos(lat) sin(dlon),
                            sin(lat) cos(lat_p) - cos(lat) sin(lat_p) cos(dlon))

with dlon = lon - lon_p, everything in radians internally. The longitude
branch uses the conventional four-quadrant atan2 and is normalized to
(-180, 180] afterwards; any piecewise atan2 definition that differs only by
multiples of 2*pi yields the same result after normalization.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFinite

__all__ = ["GeoCoord", "PoleSpec", "normalize_longitude", "rotate_coordinates", "rotate_arrays"]


@dataclass(frozen=True)
class GeoCoord:
    """A geographic point in degrees; lat in [-90, 90], lon in (-180, 180]."""

    lat_deg: float
    lon_deg: float


@dataclass(frozen=True)
class PoleSpec:
    """Rotated-pole location in geographic degrees."""

    pole_lat_deg: float
    pole_lon_deg: float


def normalize_longitude(deg):
    """Map a longitude in degrees onto the canonical half-open range (-180, 180]."""
    if not math.isfinite(deg):
        raise NonFinite(f"longitude must be finite, got {deg!r}")
    r = math.fmod(deg, 360.0)
    if r <= -180.0:
        r += 360.0
    elif r > 180.0:
        r -= 360.0
    # fmod can return -0.0; keep the canonical zero
    return r + 0.0


def rotate_coordinates(p: GeoCoord, pole: PoleSpec) -> GeoCoord:
    """Transform a geographic point into the rotated-pole frame.

    Total function for finite inputs in range: the asin argument is a dot
    product of unit vectors and is clamped against rounding excursions
    beyond [-1, 1].
    """
    lat = math.radians(p.lat_deg)
    lon = math.radians(p.lon_deg)
    plat = math.radians(pole.pole_lat_deg)
    plon = math.radians(pole.pole_lon_deg)

    dlon = lon - plon
    s = math.sin(lat) * math.sin(plat) + math.cos(lat) * math.cos(plat) * math.cos(dlon)
    s = min(1.0, max(-1.0, s))
    lat_rot = math.asin(s)

    y = math.cos(lat) * math.sin(dlon)
    x = math.sin(lat) * math.cos(plat) - math.cos(lat) * math.sin(plat) * math.cos(dlon)
    lon_rot = plon + math.atan2(y, x)

    return GeoCoord(math.degrees(lat_rot), normalize_longitude(math.degrees(lon_rot)))


def rotate_arrays(lat_deg, lon_deg, pole: PoleSpec):
    """Vectorized :func:`rotate_coordinates` over equal-shaped degree arrays.

    Returns (lat_rot_deg, lon_rot_deg) with longitudes in (-180, 180].
    Identical formulas and IEEE double arithmetic as the scalar path.
    """
    lat = np.radians(np.asarray(lat_deg, dtype=np.float64))
    lon = np.radians(np.asarray(lon_deg, dtype=np.float64))
    plat = math.radians(pole.pole_lat_deg)
    plon = math.radians(pole.pole_lon_deg)

    dlon = lon - plon
    s = np.sin(lat) * math.sin(plat) + np.cos(lat) * math.cos(plat) * np.cos(dlon)
    np.clip(s, -1.0, 1.0, out=s)
    lat_rot = np.degrees(np.arcsin(s))

    y = np.cos(lat) * np.sin(dlon)
    x = np.sin(lat) * math.cos(plat) - np.cos(lat) * math.sin(plat) * np.cos(dlon)
    lon_rot = np.degrees(plon + np.arctan2(y, x))

    # same (-180, 180] convention as normalize_longitude
    r = np.fmod(lon_rot, 360.0)
    r = np.where(r <= -180.0, r + 360.0, r)
    r = np.where(r > 180.0, r - 360.0, r)
    return lat_rot, r + 0.0
