"""Named states used in the examples and acceptance checks.

``fock(n1, ..., nd)``
    A single Fock state.
``hom_target``
    ``(|2,0> - |0,2>)/sqrt(2)``, reachable from ``|1,1>`` by a balanced beam
    splitter.
``acin3(p, q, r, phi)``
    Symmetric three-qubit normal form
    ``p (|001>+|010>+|100>)/sqrt(3) + q|111> + r e^{i phi}|000>``.  Qubit
    label 0 is mode 1 and label 1 is mode 2, so the state is
    ``r e^{i phi}|3,0> + p|2,1> + q|0,3>``.  Not normalized.
``singlet_pair(i, j)``
    Two-photon polarization singlet ``(a_i b_j - b_i a_j)/sqrt(2)`` between
    beams ``i`` and ``j`` (1-based, 1..4) on eight modes ordered
    ``a_1, b_1, a_2, b_2, ..., a_4, b_4``.
``singlet_lr(theta, phi)``
    ``cos(theta/2) l + sin(theta/2) e^{i phi} r`` inside the four-photon
    singlet subspace, with ``l, r`` the circular combinations of the three
    pairings ``s12 s34, s13 s42, s14 s23``.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence

from .errors import ArgumentError
from .fock import PureState, multiply_states

SINGLET_MODES = 8
EPSILON = cmath.exp(2j * math.pi / 3)
PAIRINGS = ((1, 2, 3, 4), (1, 3, 4, 2), (1, 4, 2, 3))


def polarization_modes(beam: int) -> tuple[int, int]:
    """0-based (horizontal, vertical) mode indices of a 1-based beam."""
    return 2 * (beam - 1), 2 * (beam - 1) + 1


def singlet_pair(i: int, j: int) -> PureState:
    if not (1 <= i <= 4 and 1 <= j <= 4) or i == j:
        raise ArgumentError(f"singlet_pair needs two distinct beams in 1..4, got ({i}, {j})")
    ai, bi = polarization_modes(i)
    aj, bj = polarization_modes(j)
    plus = [0] * SINGLET_MODES
    plus[ai] = plus[bj] = 1
    minus = [0] * SINGLET_MODES
    minus[bi] = minus[aj] = 1
    return PureState({tuple(plus): 1 / math.sqrt(2), tuple(minus): -1 / math.sqrt(2)})


def pairing_states() -> tuple[PureState, PureState, PureState]:
    """``s12 s34``, ``s13 s42`` and ``s14 s23``."""
    return tuple(multiply_states([singlet_pair(i, j), singlet_pair(k, m)])
                 for i, j, k, m in PAIRINGS)


def singlet_l() -> PureState:
    a, b, c = pairing_states()
    return (math.sqrt(2) / 3) * (a + EPSILON * b + EPSILON ** 2 * c)


def singlet_r() -> PureState:
    a, b, c = pairing_states()
    return (math.sqrt(2) / 3) * (a + EPSILON ** 2 * b + EPSILON * c)


def singlet_lr(theta: float, phi: float) -> PureState:
    return (math.cos(theta / 2) * singlet_l()
            + math.sin(theta / 2) * cmath.exp(1j * phi) * singlet_r())


def acin3(p: float, q: float, r: float, phi: float) -> PureState:
    return PureState({(3, 0): r * cmath.exp(1j * phi), (2, 1): p, (0, 3): q}, d=2, n=3)


def hom_target() -> PureState:
    return PureState({(2, 0): 1 / math.sqrt(2), (0, 2): -1 / math.sqrt(2)})


def _as_float(name, params):
    try:
        values = [float(p) for p in params]
    except (TypeError, ValueError) as exc:
        raise ArgumentError(f"{name}: parameters must be real numbers") from exc
    if not all(math.isfinite(v) for v in values):
        raise ArgumentError(f"{name}: parameters must be finite")
    return values


_ARITY = {"hom_target": 0, "acin3": 4, "singlet_pair": 2, "singlet_lr": 2}


def builtin_state(name: str, params: Sequence[float] = ()) -> PureState:
    """Look up a catalog state by name.

    Args:
        name: one of ``fock``, ``hom_target``, ``acin3``, ``singlet_pair``,
            ``singlet_lr``.
        params: positional parameters of the entry (photon counts for
            ``fock``).

    Raises:
        ArgumentError: unknown name, wrong number of parameters, or a value
            out of range.
    """
    params = list(params)
    if name == "fock":
        if not params:
            raise ArgumentError("fock needs at least one photon count")
        counts = _as_float(name, params)
        if any(c < 0 or c != int(c) for c in counts):
            raise ArgumentError("fock counts must be non-negative integers")
        return PureState.fock([int(c) for c in counts])
    if name not in _ARITY:
        raise ArgumentError(f"unknown builtin state {name!r}; known: fock, "
                            + ", ".join(sorted(_ARITY)))
    if len(params) != _ARITY[name]:
        raise ArgumentError(f"{name} takes {_ARITY[name]} parameters, got {len(params)}")
    values = _as_float(name, params)
    if name == "hom_target":
        return hom_target()
    if name == "acin3":
        if values[0] == values[1] == values[2] == 0:
            raise ArgumentError("acin3 with p = q = r = 0 is the zero vector")
        return acin3(*values)
    if name == "singlet_pair":
        if any(v != int(v) for v in values):
            raise ArgumentError("singlet_pair beams must be integers")
        return singlet_pair(int(values[0]), int(values[1]))
    return singlet_lr(*values)
