"""Moments as a post-selection rate.

Interfere k copies of a state on Fourier multiports and keep the runs with
all photons in the first output of each group.  The success rate is the
moment divided by k^(kn), and the surviving state is f^dagger^k |vac>.
"""

import numpy as np

from photon_invariants import PureState, format_state, moment, simulate_copies
from photon_invariants.interferometer import sample_shots, stirling_bound

single = PureState.fock((1,))
out = simulate_copies(single, 2)
print("two single photons:", format_state(out.output), "with p =", out.success_probability)

s = PureState({(2, 0): 0.6, (1, 1): 0.8j})
for k in (1, 2, 3):
    out = simulate_copies(s, k)
    expected = moment(s, k) / k ** (k * s.n)
    print(f"k={k}: p = {out.success_probability:.12f}, moment/k^(kn) = {expected:.12f}, "
          f"product-state ceiling {stirling_bound(s.n, k):.6f}")

# an experiment only sees counts
p = simulate_copies(s, 2).success_probability
hits = sample_shots(p, 20_000, seed=3)
print(f"20000 shots: rate {hits.mean():.4f} +- {np.sqrt(p * (1 - p) / hits.size):.4f} (exact {p:.4f})")
