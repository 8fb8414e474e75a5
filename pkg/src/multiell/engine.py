"""One Monte Carlo realization: ellipses from the scaled profile, antenna-
shaped departure angles, the single-bounce map to arrival angles, per-path
powers, receive-pattern weighting, local scattering, and an optional direct
path controlled by a Rice factor.

Randomness: one seedable generator is split into independent substreams, one
per profile tap plus one for local scattering, so changing the path count of
one cluster never perturbs another cluster's draws. Path ordering in the
output is fixed: clusters in profile order, then local scattering, then the
direct path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .antenna import AntennaPattern, power_gain, sample_aod
from .errors import ConfigError
from .geometry import DEGENERATE_DELAY_S, ellipse_from_delay, aoa_from_aod
from .pdp import NormalizedPdp, scale_pdp
from .scattering import VonMisesParams, sample_von_mises

_MAX_SEED = 2**64


class SourceKind(enum.IntEnum):
    CLUSTER = 0
    LOCAL_SCATTER = 1
    LOS = 2


@dataclass(frozen=True)
class PathSample:
    """One propagation path: arrival azimuth, weighted linear power, origin."""

    aoa_deg: float
    power_lin: float
    source: SourceKind
    cluster_index: int = -1  # 1-based for CLUSTER paths, -1 otherwise


class PathSet:
    """Array-backed sequence of :class:`PathSample`.

    ``power_lin`` holds powers after receive-pattern weighting;
    ``raw_power_lin`` holds the pre-weighting powers, which sum to one.
    """

    def __init__(self, aoa_deg, raw_power_lin, power_lin, source_kind, cluster_index):
        self.aoa_deg = np.asarray(aoa_deg, dtype=float)
        self.raw_power_lin = np.asarray(raw_power_lin, dtype=float)
        self.power_lin = np.asarray(power_lin, dtype=float)
        self.source_kind = np.asarray(source_kind, dtype=np.int8)
        self.cluster_index = np.asarray(cluster_index, dtype=np.int32)

    def __len__(self) -> int:
        return self.aoa_deg.size

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return PathSet(self.aoa_deg[idx], self.raw_power_lin[idx],
                           self.power_lin[idx], self.source_kind[idx],
                           self.cluster_index[idx])
        return PathSample(
            aoa_deg=float(self.aoa_deg[idx]),
            power_lin=float(self.power_lin[idx]),
            source=SourceKind(int(self.source_kind[idx])),
            cluster_index=int(self.cluster_index[idx]),
        )

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @property
    def raw_power_sum(self) -> float:
        return float(self.raw_power_lin.sum())


@dataclass(frozen=True)
class ScenarioConfig:
    """Full experiment description for one link."""

    pdp: NormalizedPdp
    ds_s: float
    tx_pattern: AntennaPattern
    rx_pattern: AntennaPattern
    txrx_distance_m: float = 200.0
    paths_per_cluster: int = 500
    local_scattering: VonMisesParams = field(default_factory=VonMisesParams)
    rice_factor_db: float | None = None  # None means NLOS
    seed: int = 0
    frequency_label: str = ""

    def validate(self) -> None:
        if self.txrx_distance_m <= 0.0:
            raise ConfigError(f"txrx_distance_m must be > 0, got {self.txrx_distance_m}")
        if self.ds_s <= 0.0:
            raise ConfigError(f"ds_s must be > 0, got {self.ds_s}")
        if self.paths_per_cluster < 1:
            raise ConfigError(f"paths_per_cluster must be >= 1, got {self.paths_per_cluster}")
        if not 0 <= int(self.seed) < _MAX_SEED:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.rice_factor_db is not None and math.isnan(self.rice_factor_db):
            raise ConfigError("rice_factor_db must be a number or None")

    def with_orientations(self, alpha_t_deg: float | None = None,
                          alpha_r_deg: float | None = None) -> "ScenarioConfig":
        """Copy with one or both boresights replaced."""
        tx = self.tx_pattern if alpha_t_deg is None else self.tx_pattern.pointed_at(alpha_t_deg)
        rx = self.rx_pattern if alpha_r_deg is None else self.rx_pattern.pointed_at(alpha_r_deg)
        from dataclasses import replace
        return replace(self, tx_pattern=tx, rx_pattern=rx)


def _rice_split(rice_factor_db: float) -> tuple[float, float]:
    # Returns (scatter scale 1/(K+1), direct share K/(K+1)).
    if math.isinf(rice_factor_db) and rice_factor_db > 0:
        return 0.0, 1.0
    k = 10.0 ** (rice_factor_db / 10.0)
    return 1.0 / (k + 1.0), k / (k + 1.0)


def run_realization(config: ScenarioConfig,
                    rng: np.random.Generator | None = None) -> PathSet:
    """Generate one set of propagation paths for the scenario.

    Per non-degenerate cluster i, exactly ``paths_per_cluster`` paths: the
    departure angle is drawn from the transmit pattern, mapped through the
    cluster ellipse, and the cluster's power budget is split by rescaled
    uniform draws. Degenerate clusters (zero-delay taps) contribute their
    power to the local-scattering budget unless an explicit power share is
    configured. Local scattering adds ``paths_per_cluster`` von Mises paths.
    Under a finite Rice factor one direct path at 0 degrees takes K/(K+1) of
    the total. Pre-weighting powers always sum to one; the receive pattern
    then scales each path.

    ``rng`` defaults to a fresh PCG64 generator seeded from ``config.seed``;
    pass an unused generator for reproducibility when providing one.
    """
    config.validate()
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(config.seed)))

    scaled = scale_pdp(config.pdp, config.ds_s)
    n = config.paths_per_cluster
    delays = scaled.excess_delays_s
    powers = scaled.powers_lin
    geometric = delays > DEGENERATE_DELAY_S
    routed_power = float(powers[~geometric].sum())

    share = config.local_scattering.power_share
    if not geometric.any():
        share = 1.0
        budgets = powers * 0.0
    elif share is None:
        share = routed_power
        budgets = powers
    else:
        budgets = powers * ((1.0 - share) / float(powers[geometric].sum()))

    streams = rng.spawn(len(delays) + 1)

    aoa_parts, raw_parts, kind_parts, index_parts = [], [], [], []
    for i in range(len(delays)):
        if not geometric[i]:
            continue
        ellipse = ellipse_from_delay(float(delays[i]), config.txrx_distance_m,
                                     cluster_index=i + 1)
        aod = sample_aod(config.tx_pattern, streams[i], size=n)
        aoa = aoa_from_aod(aod, ellipse.eccentricity)
        u = streams[i].random(n)
        raw = u * (float(budgets[i]) / u.sum())
        aoa_parts.append(aoa)
        raw_parts.append(raw)
        kind_parts.append(np.full(n, SourceKind.CLUSTER, dtype=np.int8))
        index_parts.append(np.full(n, i + 1, dtype=np.int32))

    local_rng = streams[-1]
    aoa_local = np.atleast_1d(sample_von_mises(config.local_scattering, local_rng, size=n))
    u = local_rng.random(n)
    raw_local = u * (share / u.sum()) if share > 0.0 else np.zeros(n)
    aoa_parts.append(aoa_local)
    raw_parts.append(raw_local)
    kind_parts.append(np.full(n, SourceKind.LOCAL_SCATTER, dtype=np.int8))
    index_parts.append(np.full(n, -1, dtype=np.int32))

    aoa = np.concatenate(aoa_parts)
    raw = np.concatenate(raw_parts)
    kind = np.concatenate(kind_parts)
    index = np.concatenate(index_parts)

    if config.rice_factor_db is not None:
        scatter_scale, direct_share = _rice_split(config.rice_factor_db)
        raw = raw * scatter_scale
        aoa = np.append(aoa, 0.0)
        raw = np.append(raw, direct_share)
        kind = np.append(kind, np.int8(SourceKind.LOS))
        index = np.append(index, np.int32(-1))

    weighted = raw * power_gain(config.rx_pattern, aoa)
    return PathSet(aoa, raw, weighted, kind, index)
