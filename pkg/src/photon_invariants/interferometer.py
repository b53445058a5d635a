"""k-copy interference with vacuum post-selection.

``k`` copies of a ``d``-mode state are laid out copy-major on ``k*d`` modes:
mode ``i`` of copy ``j`` is ``j*d + i``.  For every ``i`` the group
``{(i, 0), ..., (i, k-1)}`` is mixed by a ``k``-port whose first output is
the uniform superposition.  Keeping only outcomes with no photon outside the
first outputs leaves ``f^{dagger k}|vac>`` on ``d`` modes, with probability
``moment(psi, k) / k^(kn)``.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, CapacityError, DimensionError
from .fock import PureState, basis_dimension
from .modes import ModeUnitary, apply_mode_unitary, mode_tensor_product

SCHEME_CAPACITY = 200_000


@dataclass(frozen=True)
class SchemeOutcome:
    """Post-selected output (normalized) and the probability of the outcome."""

    output: PureState
    success_probability: float


def fourier_unitary(k: int, real_k2: bool = False) -> ModeUnitary:
    """``k``-port discrete Fourier transform, ``F[j, l] = w^(j l) / sqrt(k)``.

    Row 0 is ``(1, ..., 1)/sqrt(k)``.  With ``real_k2`` and ``k == 2`` the
    real beam splitter ``[[1, 1], [-1, 1]]/sqrt(2)`` is returned instead;
    it differs from the DFT by a sign on the second row.
    """
    if k < 1:
        raise ArgumentError("number of ports must be at least 1")
    if real_k2 and k == 2:
        return ModeUnitary(np.array([[1, 1], [-1, 1]]) / math.sqrt(2))
    w = cmath.exp(2j * math.pi / k)
    j = np.arange(k)
    return ModeUnitary(w ** np.outer(j, j) / math.sqrt(k))


def copy_unitary(d: int, port: ModeUnitary) -> ModeUnitary:
    """Block unitary on ``k*d`` modes applying ``port`` to every mode group."""
    k = port.d
    u = np.zeros((k * d, k * d), dtype=complex)
    for i in range(d):
        idx = np.arange(k) * d + i
        u[np.ix_(idx, idx)] = port.matrix
    return ModeUnitary(u)


def _interfere(states: Sequence[PureState], port: ModeUnitary | None) -> SchemeOutcome:
    d = states[0].d
    if any(s.d != d for s in states):
        raise DimensionError("all inputs must have the same number of modes")
    k = len(states)
    total = sum(s.n for s in states)
    size = basis_dimension(total, k * d)
    if size > SCHEME_CAPACITY:
        raise CapacityError(f"{total} photons in {k * d} modes span {size} kets "
                            f"(> {SCHEME_CAPACITY})")
    if port is None:
        port = fourier_unitary(k)
    elif port.d != k:
        raise DimensionError(f"port has {port.d} ports for {k} copies")
    joint = mode_tensor_product(states)
    out = apply_mode_unitary(copy_unitary(d, port), joint)
    kept = {key[:d]: amp for key, amp in out.amps.items() if not any(key[d:])}
    survivor = PureState(kept, d=d, n=total)
    prob = survivor.norm_squared()
    if prob > 0:
        survivor = survivor.normalized()
    return SchemeOutcome(survivor, prob)


def simulate_copies(s: PureState, k: int, port: ModeUnitary | None = None) -> SchemeOutcome:
    """Interfere ``k`` copies of ``s`` and post-select vacuum on the side outputs.

    Args:
        s: input state.
        k: number of copies.
        port: optional ``k``-port replacing the DFT; only its first row
            matters for the post-selected branch.
    """
    if k < 1:
        raise ArgumentError("need at least one copy")
    return _interfere([s] * k, port)


def fuse(states: Sequence[PureState], port: ModeUnitary | None = None) -> SchemeOutcome:
    """Same scheme with different inputs; the output is ``f_1^dagger ... f_k^dagger|vac>``."""
    if not states:
        raise ArgumentError("need at least one state")
    return _interfere(list(states), port)


def sample_shots(probability: float, shots: int, seed: int) -> np.ndarray:
    """Boolean success record per shot, from a seeded Philox stream."""
    if shots < 0:
        raise ArgumentError("number of shots must be non-negative")
    rng = np.random.Generator(np.random.Philox(seed))
    return rng.random(shots) < probability


def stirling_bound(n: int, k: int) -> float:
    """``(kn)! / ((n!)^k k^(kn))``, the success probability of a product state."""
    return math.factorial(k * n) / (math.factorial(n) ** k * k ** (k * n))
