"""Antenna patterns: omnidirectional or a Gaussian main beam.

The Gaussian shape applies to the normalized power pattern, so the
half-power beamwidth (HPBW) fixes the deviation directly: the gain falls to
one half at HPBW/2 off boresight. Absolute gain in dBi is carried as
metadata only; nothing downstream scales by it (angle statistics are
invariant to a common power factor).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, InvalidHpbw
from .geometry import wrap_degrees

_HALF_POWER_FACTOR = 2.0 * math.sqrt(2.0 * math.log(2.0))  # ~2.3548


class PatternKind(enum.Enum):
    OMNI = "omni"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class AntennaPattern:
    kind: PatternKind
    gain_dbi: float = 0.0
    hpbw_deg: float | None = None
    boresight_deg: float = 0.0

    def __post_init__(self):
        if self.kind is PatternKind.GAUSSIAN:
            if self.hpbw_deg is None:
                raise ConfigError("Gaussian pattern requires hpbw_deg")
            if not 0.0 < self.hpbw_deg < 360.0:
                raise InvalidHpbw(f"hpbw_deg must be in (0, 360), got {self.hpbw_deg}")
        object.__setattr__(self, "boresight_deg", wrap_degrees(self.boresight_deg))

    @staticmethod
    def omni(gain_dbi: float = 0.0) -> "AntennaPattern":
        return AntennaPattern(PatternKind.OMNI, gain_dbi=gain_dbi)

    @staticmethod
    def gaussian(hpbw_deg: float, boresight_deg: float = 0.0,
                 gain_dbi: float = 0.0) -> "AntennaPattern":
        return AntennaPattern(PatternKind.GAUSSIAN, gain_dbi=gain_dbi,
                              hpbw_deg=hpbw_deg, boresight_deg=boresight_deg)

    def pointed_at(self, boresight_deg: float) -> "AntennaPattern":
        """Copy of this pattern with a new boresight."""
        return AntennaPattern(self.kind, self.gain_dbi, self.hpbw_deg, boresight_deg)


def sigma_from_hpbw(hpbw_deg: float) -> float:
    """Standard deviation of the Gaussian power shape exp(-phi^2 / (2 sigma^2))
    that reaches one half at phi = hpbw/2, i.e. hpbw / (2 sqrt(2 ln 2))."""
    if not 0.0 < hpbw_deg < 360.0:
        raise InvalidHpbw(f"hpbw_deg must be in (0, 360), got {hpbw_deg}")
    return hpbw_deg / _HALF_POWER_FACTOR


def power_gain(pattern: AntennaPattern, phi_deg):
    """Normalized power gain at azimuth ``phi_deg`` (1 at boresight).

    Omni patterns return 1 everywhere. Gaussian patterns use the shortest
    angular distance to boresight. Accepts scalars or arrays.
    """
    phi = np.asarray(phi_deg, dtype=float)
    scalar = phi.ndim == 0
    if pattern.kind is PatternKind.OMNI:
        out = np.ones_like(phi, dtype=float)
        return float(out) if scalar else out
    sigma = sigma_from_hpbw(pattern.hpbw_deg)
    delta = wrap_degrees(phi - pattern.boresight_deg)
    out = np.exp(-np.square(delta) / (2.0 * sigma**2))
    return float(out) if scalar else out


def sample_aod(pattern: AntennaPattern, rng: np.random.Generator, size=None):
    """Draw departure angles from the pattern-shaped density.

    Omni: uniform on (-180, 180]. Gaussian: normal around the boresight with
    deviation sigma_from_hpbw, redrawing any value farther than 180 degrees
    from boresight (rejection keeps the density unimodal; for beams of a few
    tens of degrees the rejected mass is far below 1e-15). Results are
    wrapped into (-180, 180]. With ``size=None`` a single float is returned.
    """
    n = 1 if size is None else int(size)
    if pattern.kind is PatternKind.OMNI:
        draws = rng.random(n) * 360.0 - 180.0
    else:
        sigma = sigma_from_hpbw(pattern.hpbw_deg)
        draws = rng.normal(pattern.boresight_deg, sigma, n)
        while True:
            bad = np.abs(draws - pattern.boresight_deg) > 180.0
            if not bad.any():
                break
            draws[bad] = rng.normal(pattern.boresight_deg, sigma, int(bad.sum()))
    draws = wrap_degrees(draws)
    return float(draws[0]) if size is None else draws
