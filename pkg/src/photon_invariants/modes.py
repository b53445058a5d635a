"""Linear optics acting on Fock states.

Convention: a mode unitary ``U`` sends the single-photon state ``|j>`` to
``sum_i U[i, j] |i>``, i.e. ``a_j^dagger -> sum_i U[i, j] a_i^dagger``.  In
the particle picture this is ``U^{tensor n}`` and composition is ordinary
matrix multiplication: ``apply(U, apply(V, s)) == apply(U @ V, s)``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .errors import ArgumentError, DimensionError
from .fock import (PureState, factorial_product, from_polynomial, polynomial_multiply,
                   to_polynomial)

UNITARY_TOL = 1e-10


class ModeUnitary:
    """A ``d x d`` unitary acting on the modes.

    Args:
        matrix: square complex matrix; unitarity is checked entrywise to
            ``1e-10``.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix, check: bool = True):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise DimensionError(f"mode unitary must be square, got shape {m.shape}")
        if check:
            err = np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0])))
            if err > UNITARY_TOL:
                raise ArgumentError(f"matrix is not unitary (max deviation {err:.3g})")
        m.setflags(write=False)
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def d(self) -> int:
        return self._matrix.shape[0]

    def __matmul__(self, other: "ModeUnitary") -> "ModeUnitary":
        return ModeUnitary(self._matrix @ other._matrix)

    def dagger(self) -> "ModeUnitary":
        return ModeUnitary(self._matrix.conj().T)

    def __repr__(self):
        return f"ModeUnitary({np.array2string(self._matrix, precision=4)})"


def identity_unitary(d: int) -> ModeUnitary:
    return ModeUnitary(np.eye(d))


def haar_random_unitary(d: int, seed: int) -> ModeUnitary:
    """Haar-distributed unitary from a seeded Philox (counter-based) stream.

    A complex Ginibre matrix is QR-factorized and the columns of ``Q`` are
    rephased so that ``R`` has a positive real diagonal.
    """
    if d < 1:
        raise ArgumentError("dimension must be at least 1")
    rng = np.random.Generator(np.random.Philox(seed))
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    q = q * (diag / np.abs(diag))
    return ModeUnitary(q)


def permutation_unitary(perm: Sequence[int], block: int = 1) -> ModeUnitary:
    """Unitary moving group ``i`` of ``block`` consecutive modes to group ``perm[i]``.

    Args:
        perm: 1-based images, ``perm[i-1]`` is where group ``i`` goes.  For
            example ``(2, 3, 1)`` is the cycle 1 -> 2 -> 3 -> 1.
        block: modes per group; ``block=2`` moves polarization pairs.
    """
    perm = [int(p) for p in perm]
    m = len(perm)
    if block < 1:
        raise ArgumentError("block size must be at least 1")
    if sorted(perm) != list(range(1, m + 1)):
        raise ArgumentError(f"{perm} is not a permutation of 1..{m}")
    u = np.zeros((m * block, m * block))
    for src, dst in enumerate(perm):
        for t in range(block):
            u[(dst - 1) * block + t, src * block + t] = 1.0
    return ModeUnitary(u)


def swap_permutation(i: int, j: int, m: int) -> list[int]:
    """1-based permutation of ``m`` items exchanging ``i`` and ``j``."""
    perm = list(range(1, m + 1))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return perm


def apply_creation_monomial(s: PureState, m: Sequence[int]) -> PureState:
    """Apply the normalized monomial ``prod_i (a_i^dagger)^{m_i} / sqrt(m_i!)``."""
    m = tuple(int(c) for c in m)
    if len(m) != s.d:
        raise DimensionError(f"monomial has {len(m)} modes, state has {s.d}")
    out = {}
    for key, amp in s.amps.items():
        coef = 1.0
        for ni, mi in zip(key, m):
            coef *= math.comb(ni + mi, mi)
        out[tuple(a + b for a, b in zip(key, m))] = amp * math.sqrt(coef)
    return PureState(out, d=s.d, n=s.n + sum(m))


def apply_annihilation_monomial(s: PureState, m: Sequence[int],
                                normalized: bool = True) -> PureState:
    """Apply ``prod_i a_i^{m_i}``, divided by ``sqrt(prod m_i!)`` when ``normalized``."""
    m = tuple(int(c) for c in m)
    if len(m) != s.d:
        raise DimensionError(f"monomial has {len(m)} modes, state has {s.d}")
    if sum(m) > s.n:
        raise DimensionError("cannot remove more photons than the state contains")
    norm = 1.0 / math.sqrt(factorial_product(m)) if normalized else 1.0
    out = {}
    for key, amp in s.amps.items():
        if any(ni < mi for ni, mi in zip(key, m)):
            continue
        coef = 1
        for ni, mi in zip(key, m):
            coef *= math.perm(ni, mi)
        out[tuple(a - b for a, b in zip(key, m))] = amp * math.sqrt(coef) * norm
    return PureState(out, d=s.d, n=s.n - sum(m))


def _linear_form_power(column: np.ndarray, power: int, cache: dict, j: int) -> dict:
    """Sparse polynomial of ``(sum_i column[i] x_i)^power``."""
    key = (j, power)
    if key in cache:
        return cache[key]
    d = len(column)
    if power == 0:
        result = {(0,) * d: 1.0}
    else:
        base = {}
        for i, c in enumerate(column):
            if c != 0:
                mono = [0] * d
                mono[i] = 1
                base[tuple(mono)] = c
        result = polynomial_multiply(_linear_form_power(column, power - 1, cache, j), base)
    cache[key] = result
    return result


def apply_mode_unitary(U: ModeUnitary, s: PureState) -> PureState:
    """Transform a state by linear optics.

    The creation polynomial is re-expanded after the substitution
    ``a_j^dagger -> sum_i U[i, j] a_i^dagger``; zero matrix entries are
    skipped so permutations and diagonal phases are exact.
    """
    if U.d != s.d:
        raise DimensionError(f"unitary acts on {U.d} modes, state has {s.d}")
    mat = U.matrix
    cache: dict = {}
    result: dict = {}
    for key, coef in to_polynomial(s).items():
        term = {(0,) * s.d: coef}
        for j, power in enumerate(key):
            if power:
                term = polynomial_multiply(term, _linear_form_power(mat[:, j], power, cache, j))
        for mono, value in term.items():
            result[mono] = result.get(mono, 0) + value
    return from_polynomial(result, s.d, s.n)


def mode_tensor_product(states: Sequence[PureState]) -> PureState:
    """Place states on disjoint sets of modes, first state on the first modes."""
    if not states:
        raise ArgumentError("need at least one state")
    amps = {(): 1.0 + 0j}
    for s in states:
        amps = {k + key: v * amp for k, v in amps.items() for key, amp in s.amps.items()}
    return PureState(amps, d=sum(s.d for s in states), n=sum(s.n for s in states))
