"""Block spectra and moments survive any passive interferometer.

A random three-photon state in three modes is pushed through a Haar-random
unitary.  The amplitudes change completely; the invariants do not.
"""

import numpy as np

from photon_invariants import PureState, apply_mode_unitary, block, block_spectrum, haar_random_unitary, moment
from photon_invariants.moments import symmetric_projection_norm, symmetrization_factor

rng = np.random.default_rng(1)
d, n = 3, 3
dim = len(PureState.zero(d, n).to_vector())
v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
psi = PureState.from_vector(v / np.linalg.norm(v), d, n)
u = haar_random_unitary(d, seed=42)
phi = apply_mode_unitary(u, psi)

print("amplitude change:", np.abs(psi.to_vector() - phi.to_vector()).max().round(3))

for k in range(4):
    a, b = block_spectrum(block(psi, k)), block_spectrum(block(phi, k))
    print(f"k={k}  dim {len(a):2d}  max spectral difference {np.abs(a - b).max():.1e}")

for k in (1, 2, 3):
    m = moment(psi, k)
    # the moment is the symmetric weight of k copies, scaled by (kn)!/(n!)^k
    p = symmetric_projection_norm(psi, k)
    print(f"moment k={k}: {m:.10f} vs rotated {moment(phi, k):.10f}; "
          f"factor * projection = {symmetrization_factor(n, k) * p:.10f}")
