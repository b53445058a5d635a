"""Two photons on a beam splitter.

|1,1> and (|2,0> - |0,2>)/sqrt(2) look different in the Fock basis, yet a
50:50 beam splitter turns one into the other.  |2,0> on the other hand can
never be reached from |1,1>: the single-photon block already tells them apart.
"""

import numpy as np

from photon_invariants import (PureState, block, block_spectrum, equiv, format_state, hom_target,
                               apply_mode_unitary)

one_one = PureState.fock((1, 1))
two_zero = PureState.fock((2, 0))

print("input     :", format_state(one_one))
print("target    :", format_state(hom_target()))

verdict = equiv(one_one, hom_target())
print("verdict   :", verdict.verdict.value)
print("certificate unitary:\n", np.round(verdict.unitary.matrix, 6))
print("check     :", format_state(apply_mode_unitary(verdict.unitary, one_one)))

# <a_i a_i^dagger> = n_i + 1 on Fock states, so the k=1 spectra are [2, 2] and [3, 1]
for s in (one_one, two_zero, hom_target()):
    print(f"{format_state(s):45s} k=1 spectrum {block_spectrum(block(s, 1)).round(12)}")

v = equiv(one_one, two_zero)
print("verdict   :", v.verdict.value, v.witness["invariant"], "at k =", v.witness["k"])
