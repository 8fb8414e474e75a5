"""multiell: seedable Monte Carlo simulation of angle-of-arrival dispersion
on confocal-ellipse link geometry.

A power delay profile fixes a family of ellipses with the transmitter and
receiver at the foci; antenna patterns shape the departure angles and weight
the arriving power; the outputs are the power angular spectrum and the rms
angle spread, with orientation sweeps for both link ends.
"""

from .antenna import AntennaPattern, PatternKind, power_gain, sample_aod, sigma_from_hpbw
from .engine import PathSample, PathSet, ScenarioConfig, SourceKind, run_realization
from .errors import (BadBinWidth, ConfigError, DegenerateEllipse, EmptyProfile,
                     InvalidDs, InvalidGeometry, InvalidHpbw, KappaOutOfRange,
                     MultiellError, NoPower, ParseError, UnsortedDelays)
from .geometry import (DEGENERATE_DELAY_S, SPEED_OF_LIGHT_M_S, Ellipse,
                       aoa_from_aod, aod_from_aoa, arrival_bearing,
                       ellipse_from_delay, reflection_point, wrap_degrees)
from .pdp import (BUILTIN_NLOS, NormalizedPdp, ScaledPdp, builtin_nlos_profile,
                  load_pdp, loads_pdp, resolve_pdp, scale_pdp)
from .scattering import VonMisesParams, bessel_i0, sample_von_mises, von_mises_pdf
from .stats import (AngularSpectrum, SweepAxis, SweepResult, angular_spread,
                    estimate_pas, sweep_as)

__version__ = "0.1.0"

__all__ = [
    "AntennaPattern", "PatternKind", "power_gain", "sample_aod", "sigma_from_hpbw",
    "PathSample", "PathSet", "ScenarioConfig", "SourceKind", "run_realization",
    "BadBinWidth", "ConfigError", "DegenerateEllipse", "EmptyProfile", "InvalidDs",
    "InvalidGeometry", "InvalidHpbw", "KappaOutOfRange", "MultiellError", "NoPower",
    "ParseError", "UnsortedDelays",
    "DEGENERATE_DELAY_S", "SPEED_OF_LIGHT_M_S", "Ellipse", "aoa_from_aod",
    "aod_from_aoa", "arrival_bearing", "ellipse_from_delay", "reflection_point",
    "wrap_degrees",
    "BUILTIN_NLOS", "NormalizedPdp", "ScaledPdp", "builtin_nlos_profile", "load_pdp",
    "loads_pdp", "resolve_pdp", "scale_pdp",
    "VonMisesParams", "bessel_i0", "sample_von_mises", "von_mises_pdf",
    "AngularSpectrum", "SweepAxis", "SweepResult", "angular_spread", "estimate_pas",
    "sweep_as",
    "__version__",
]
