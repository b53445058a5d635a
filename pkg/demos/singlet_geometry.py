"""Four photons, two polarization singlets.

Two-singlet states of four beams span a qubit: l and r.  Swapping beams acts
on that qubit as phases and exchanges, and a 3-cycle of beams rotates the
azimuth by 2 pi / 3.  The moments depend on the polar angle and, from k=3
on, on the azimuth as well.
"""

import math

from photon_invariants import apply_mode_unitary, fidelity, moment, permutation_unitary, singlet_l, singlet_lr, singlet_r
from photon_invariants.modes import swap_permutation

l, r = singlet_l(), singlet_r()
swap = permutation_unitary(swap_permutation(1, 2, 4), block=2)
print("swap 1<->2: |<-r|l'>|^2 =", round(fidelity(apply_mode_unitary(swap, l), r), 12))

theta, phi = 1.2, 0.3
cycle = permutation_unitary([2, 3, 1, 4], block=2)
print("cycle: fidelity with phi + 2pi/3 =",
      round(fidelity(apply_mode_unitary(cycle, singlet_lr(theta, phi)), singlet_lr(theta, phi + 2 * math.pi / 3)), 12))

for th in (0.0, math.pi / 2, math.pi):
    for ph in (0.0, math.pi / 3):
        s = singlet_lr(th, ph)
        print(f"theta={th:.3f} phi={ph:.3f}  <f^2 f+^2> = {moment(s, 2):.6f}  <f^3 f+^3> = {moment(s, 3):.6f}")
