"""Two-mode states as constellations.

Every n-photon two-mode state is a product of n single-photon creation
operators, i.e. n points on the Bloch sphere.  Linear optics rotates the
sphere, so equivalence is a question about rigid rotations of point sets.
Mirror images are not rotations, which is why a state and its complex
conjugate can share every invariant and still be inequivalent.
"""

from photon_invariants import (PureState, apply_mode_unitary, constellation, equiv, equivalent_d2, fidelity,
                               haar_random_unitary)
from photon_invariants.catalog import acin3

psi = acin3(0.4, 0.7, 0.5, 0.9).normalized()
print("stars (theta, phi):\n", constellation(psi).angles().round(6))

u = haar_random_unitary(2, seed=8)
rotated = apply_mode_unitary(u, psi)
v = equivalent_d2(psi, rotated)
print("rotated copy certified:", v is not None)
# the certificate is fixed only up to a phase, so compare its action on the state
print("certificate maps psi onto the rotated copy:",
      round(fidelity(apply_mode_unitary(v, psi), rotated), 12))

mirror = psi.conj()
print("conjugate verdict:", equiv(psi, mirror, kmax=3).verdict.value)
print("conjugate certified:", equivalent_d2(psi, mirror) is not None)

print("|1,1> stars:", constellation(PureState.fock((1, 1))).angles().round(6).tolist())
