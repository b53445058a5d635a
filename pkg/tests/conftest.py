import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from photon_invariants import PureState  # noqa: E402


def random_state(rng, d, n, normalize=True):
    dim = len(PureState.zero(d, n).to_vector())
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    if normalize:
        v /= np.linalg.norm(v)
    return PureState.from_vector(v, d, n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
