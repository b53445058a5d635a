"""Linear-optics equivalence of multi-photon states.

Core objects are :class:`PureState` (Fock-basis amplitudes) and
:class:`ModeUnitary`.  Invariants come in two families: the spectra of the
anti-normally ordered blocks (:func:`block`, :func:`block_spectrum`) and the
moments ``<f^k f^dagger^k>`` (:func:`moment`).  For two modes,
:func:`equivalent_d2` returns an explicit beam-splitter certificate.
"""

from .analysis import EquivVerdict, Verdict, equiv, invariants_report, jacobian_rank
from .catalog import acin3, builtin_state, hom_target, singlet_l, singlet_lr, singlet_pair, singlet_r
from .errors import (ArgumentError, CapacityError, DimensionError, NumericError, OpticsError,
                     ParseError, SymmetryError)
from .expr import format_state, parse_state
from .fock import (PureState, fidelity, fock_basis, from_particle_vector, from_polynomial,
                   inner_product, multiply_states, to_particle_vector, to_polynomial)
from .interferometer import SchemeOutcome, fourier_unitary, fuse, simulate_copies
from .majorana import Constellation, constellation, equivalent_d2, rotation_match, state_from_constellation
from .modes import (ModeUnitary, apply_mode_unitary, haar_random_unitary, identity_unitary,
                    mode_tensor_product, permutation_unitary)
from .moments import moment, power_state, symmetric_projection_norm, symmetrization_factor
from .schwinger import frame_coefficients, reconstruct_density
from .spectral import block, block_spectrum, char_poly, spectral_report

__version__ = "0.1.0"

__all__ = [
    "EquivVerdict", "Verdict", "equiv", "invariants_report", "jacobian_rank", "acin3",
    "builtin_state", "hom_target", "singlet_l", "singlet_lr", "singlet_pair", "singlet_r",
    "ArgumentError", "CapacityError", "DimensionError", "NumericError", "OpticsError",
    "ParseError", "SymmetryError", "format_state", "parse_state", "PureState", "fidelity",
    "fock_basis", "from_particle_vector", "from_polynomial", "inner_product",
    "multiply_states", "to_particle_vector", "to_polynomial", "SchemeOutcome",
    "fourier_unitary", "fuse", "simulate_copies", "Constellation", "constellation",
    "equivalent_d2", "rotation_match", "state_from_constellation", "ModeUnitary",
    "apply_mode_unitary", "haar_random_unitary", "identity_unitary", "mode_tensor_product",
    "permutation_unitary", "moment", "power_state", "symmetric_projection_norm",
    "symmetrization_factor", "frame_coefficients", "reconstruct_density", "block",
    "block_spectrum", "char_poly", "spectral_report",
]
