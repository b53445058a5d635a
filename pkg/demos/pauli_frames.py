"""Symmetric Pauli strings from two bosonic modes.

The expectation of a Pauli string summed over all particle orderings equals
a normally ordered polynomial in the mode operators.  Collecting those
numbers per class of strings is enough to rebuild the full n-qubit density
matrix.
"""

import numpy as np

from photon_invariants import PureState, frame_coefficients, reconstruct_density, to_particle_vector
from photon_invariants.schwinger import (count_classes, symmetrized_string_expectation_fock,
                                         symmetrized_string_expectation_particle)

s = PureState({(3, 0): 0.5, (1, 2): 0.5j, (0, 3): np.sqrt(0.5)})
for counts in list(count_classes(3))[:6]:
    a = symmetrized_string_expectation_particle(s, counts)
    b = symmetrized_string_expectation_fock(s, counts)
    print(f"(n_I, n_x, n_y, n_z) = {counts}: particle {a:+.10f}  modes {b:+.10f}")

rho = reconstruct_density(frame_coefficients(s))
v = to_particle_vector(s).data
print("fidelity of rebuilt density matrix:", round(float(np.vdot(v, rho @ v).real), 12))
