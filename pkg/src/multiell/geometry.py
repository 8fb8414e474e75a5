"""Confocal-ellipse link geometry.

Each time-cluster of a power delay profile maps to one ellipse whose foci
hold the transmitter and receiver: every point on the ellipse gives the same
total Tx-scatterer-Rx path length, fixed by the cluster's excess delay.

Coordinate frame: Tx focus at (-D/2, 0), Rx focus at (+D/2, 0), with D the
Tx-Rx distance. Angles are in degrees on (-180, 180].

Angle references for the departure/arrival map: 0 degrees lies along the
focal axis at both ends, oriented so that a departure at 0 leaves the
transmitter heading away from the receiver (the bounce lands behind the
transmitter) and an arrival at 0 reaches the receiver from the direction of
the transmitter. Both angles are positive on the same side of the axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEllipse, InvalidGeometry

SPEED_OF_LIGHT_M_S = 299_792_458.0

# Below this excess delay the ellipse collapses onto the focal segment
# (eccentricity -> 1); such clusters belong to the local-scattering component.
DEGENERATE_DELAY_S = 1e-10


def wrap_degrees(angle_deg):
    """Wrap angles into (-180, 180]. Accepts scalars or arrays.

    Values already inside the interval pass through unchanged, so angles far
    below the 180-degree rounding scale keep full precision.
    """
    a = np.asarray(angle_deg, dtype=float)
    out_of_range = (a <= -180.0) | (a > 180.0)
    wrapped = (a + 180.0) % 360.0 - 180.0
    wrapped = np.where(wrapped == -180.0, 180.0, wrapped)
    result = np.where(out_of_range, wrapped, a)
    return float(result) if np.isscalar(angle_deg) or a.ndim == 0 else result


@dataclass(frozen=True)
class Ellipse:
    """One confocal ellipse (one time-cluster).

    Attributes:
        semi_major_m: semi-major axis a, in meters.
        focal_half_distance_m: half the Tx-Rx distance (D/2), in meters.
        eccentricity: D / (2a), strictly inside (0, 1).
        cluster_index: 1-based index of the originating cluster.
    """

    semi_major_m: float
    focal_half_distance_m: float
    eccentricity: float
    cluster_index: int = 1

    @property
    def semi_minor_m(self) -> float:
        return float(np.sqrt(self.semi_major_m**2 - self.focal_half_distance_m**2))


def ellipse_from_delay(excess_delay_s: float, txrx_distance_m: float,
                       cluster_index: int = 1) -> Ellipse:
    """Build the ellipse whose total reflection path exceeds the direct path
    by ``excess_delay_s``.

    The total path length is D + c * excess_delay, so the semi-major axis is
    half of that and the eccentricity is D divided by the total path.

    Raises:
        InvalidGeometry: if the Tx-Rx distance is not positive.
        DegenerateEllipse: if the excess delay is at or below the degenerate
            threshold; the caller must route that cluster to local scattering.
    """
    if txrx_distance_m <= 0.0:
        raise InvalidGeometry(f"txrx_distance_m must be > 0, got {txrx_distance_m}")
    if excess_delay_s <= DEGENERATE_DELAY_S:
        raise DegenerateEllipse(
            f"excess delay {excess_delay_s} s is at or below {DEGENERATE_DELAY_S} s")
    total_path_m = txrx_distance_m + SPEED_OF_LIGHT_M_S * excess_delay_s
    return Ellipse(
        semi_major_m=total_path_m / 2.0,
        focal_half_distance_m=txrx_distance_m / 2.0,
        eccentricity=txrx_distance_m / total_path_m,
        cluster_index=cluster_index,
    )


def _fold_ratio(eccentricity: float) -> float:
    # Half-angle compression factor of the single-bounce map.
    return (1.0 - eccentricity) / (1.0 + eccentricity)


def _half_angle_map(angle_deg, ratio: float):
    """Odd map tan(out/2) = ratio * tan(in/2), with |in| = 180 fixed."""
    phi = np.asarray(angle_deg, dtype=float)
    scalar = phi.ndim == 0
    phi = np.atleast_1d(wrap_degrees(phi))
    mag = np.abs(phi)
    out = 2.0 * np.degrees(np.arctan(ratio * np.tan(np.radians(mag / 2.0))))
    out = np.where(mag == 180.0, 180.0, out)
    # sgn(0) = +1
    out = np.where(phi < 0.0, -out, out)
    return float(out[0]) if scalar else out


def aoa_from_aod(phi_t_deg, eccentricity):
    """Arrival angle at the receiver for a departure angle on one ellipse.

    Implemented as the half-angle form tan(aoa/2) = r * tan(aod/2) with
    r = (1 - e) / (1 + e), which is algebraically identical to

        aoa = sgn(aod) * arccos[(2e + (1+e^2) cos aod) / (1 + e^2 + 2e cos aod)]

    but numerically stable near 0 and 180 degrees. e = 0 reduces to the
    identity; e -> 1 compresses every arrival toward the transmitter
    direction. Accepts scalar or array ``phi_t_deg``.
    """
    if not 0.0 <= eccentricity < 1.0:
        raise InvalidGeometry(f"eccentricity must be in [0, 1), got {eccentricity}")
    return _half_angle_map(phi_t_deg, _fold_ratio(eccentricity))


def aod_from_aoa(phi_r_deg, eccentricity):
    """Inverse of :func:`aoa_from_aod` on the same ellipse (focus symmetry
    swaps the compression ratio for its reciprocal)."""
    if not 0.0 <= eccentricity < 1.0:
        raise InvalidGeometry(f"eccentricity must be in [0, 1), got {eccentricity}")
    return _half_angle_map(phi_r_deg, 1.0 / _fold_ratio(eccentricity))


def reflection_point(phi_t_deg: float, ellipse: Ellipse) -> tuple[float, float]:
    """Intersection of a ray from the Tx focus with the ellipse boundary.

    The ray angle is measured from the +x axis at the Tx focus (-D/2, 0),
    counterclockwise positive. Every ray from an interior focus meets the
    boundary exactly once; the focal polar form gives it in closed form.
    """
    a = ellipse.semi_major_m
    e = ellipse.eccentricity
    f = ellipse.focal_half_distance_m
    psi = np.radians(wrap_degrees(phi_t_deg))
    radius = a * (1.0 - e**2) / (1.0 - e * np.cos(psi))
    return (-f + radius * np.cos(psi), radius * np.sin(psi))


def arrival_bearing(point_xy: tuple[float, float], ellipse: Ellipse) -> float:
    """Angle at the Rx focus toward ``point_xy``, measured from the direction
    pointing at the Tx (the -x axis), positive on the +y side.

    Pairing this with :func:`reflection_point` reproduces the departure /
    arrival map geometrically: for a departure angle ``phi``,
    ``arrival_bearing(reflection_point(180 - phi, ell), ell)`` equals
    ``aoa_from_aod(phi, ell.eccentricity)`` (the ray convention of
    ``reflection_point`` is referenced toward the receiver, hence the
    180-degree re-reference).
    """
    x, y = point_xy
    f = ellipse.focal_half_distance_m
    return float(np.degrees(np.arctan2(y, -(x - f))))
