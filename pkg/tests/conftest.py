import numpy as np
import pytest

from multiell.engine import PathSet, SourceKind


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def make_pathset(aoa_deg, power_lin):
    """PathSet with the given weighted powers (raw == weighted, all cluster 1)."""
    aoa = np.asarray(aoa_deg, dtype=float)
    p = np.asarray(power_lin, dtype=float)
    kind = np.full(aoa.size, SourceKind.CLUSTER, dtype=np.int8)
    idx = np.ones(aoa.size, dtype=np.int32)
    return PathSet(aoa, p, p, kind, idx)
