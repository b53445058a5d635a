"""Symmetrized Pauli strings on two-mode states, and frame reconstruction.

Mode 1 (operator ``a``) is qubit level 0 and mode 2 (``b``) is level 1.  A
count tuple ``(n_I, n_x, n_y, n_z)`` with total ``n`` names the class of
Pauli strings with those multiplicities.  The symmetrized expectation sums
the string over all ``n!`` orderings of the particles, repeated orderings
included, so the identity class evaluates to ``n!``.

Two independent evaluations are provided: brute force in the particle
picture, and the normally ordered product
``:(a+a + b+b)^{n_I} (a+b + b+a)^{n_x} (-i a+b + i b+a)^{n_y} (a+a - b+b)^{n_z}:``
evaluated with mode operators.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, CapacityError
from .fock import PureState, to_particle_vector
from .modes import apply_annihilation_monomial

PARTICLE_LIMIT = 10**6
LABELS = ("I", "x", "y", "z")
PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
# Gaussian-integer entries (re, im) of each Pauli matrix, used for the exact expansion
_PAULI_ENTRIES = tuple(
    {(mu, nu): (int(round(m[mu, nu].real)), int(round(m[mu, nu].imag)))
     for mu in range(2) for nu in range(2) if m[mu, nu] != 0}
    for m in PAULI
)


def _check_counts(s: PureState, counts: Sequence[int]) -> tuple[int, int, int, int]:
    if s.d != 2:
        raise ArgumentError("Pauli strings need a two-mode state")
    counts = tuple(int(c) for c in counts)
    if len(counts) != 4 or any(c < 0 for c in counts):
        raise ArgumentError("counts must be four non-negative integers (n_I, n_x, n_y, n_z)")
    if sum(counts) != s.n:
        raise ArgumentError(f"counts add up to {sum(counts)}, state has {s.n} photons")
    return counts


def count_classes(n: int):
    """All ``(n_I, n_x, n_y, n_z)`` with total ``n``."""
    for ni in range(n, -1, -1):
        for nx in range(n - ni, -1, -1):
            for ny in range(n - ni - nx, -1, -1):
                yield (ni, nx, ny, n - ni - nx - ny)


def pauli_string(counts: Sequence[int]) -> tuple[int, ...]:
    """Canonical string of a class, e.g. ``(0, 1, 0, 1) -> (1, 3)``."""
    return tuple(itertools.chain.from_iterable([p] * c for p, c in enumerate(counts)))


def string_expectation(vector: np.ndarray, string: Sequence[int]) -> complex:
    """``<v| sigma^{i_1} x ... x sigma^{i_n} |v>`` for a dense ``2^n`` vector."""
    n = len(string)
    t = np.asarray(vector).reshape((2,) * n) if n else np.asarray(vector).reshape(())
    out = t
    for axis, p in enumerate(string):
        if p:
            out = np.moveaxis(np.tensordot(PAULI[p], out, axes=([1], [axis])), 0, axis)
    return complex(np.vdot(t.ravel(), out.ravel()))


def symmetrized_string_expectation_particle(s: PureState, counts: Sequence[int]) -> float:
    """Symmetrized expectation computed on the ``2^n`` particle vector.

    On a symmetric state every ordering of the string has the same
    expectation, so the ``n!`` sum is ``n!`` times one canonical string.
    """
    counts = _check_counts(s, counts)
    if 2 ** s.n > PARTICLE_LIMIT:
        raise CapacityError(f"2^{s.n} exceeds the particle-picture limit")
    vec = to_particle_vector(s).data
    value = string_expectation(vec, pauli_string(counts))
    return math.factorial(s.n) * value.real


def symmetrized_string_expectation_enumerated(s: PureState, counts: Sequence[int]) -> float:
    """Same quantity with every one of the ``n!`` orderings evaluated explicitly."""
    counts = _check_counts(s, counts)
    vec = to_particle_vector(s).data
    base = pauli_string(counts)
    return sum(string_expectation(vec, perm).real for perm in itertools.permutations(base))


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def normal_ordered_polynomial(counts: Sequence[int]) -> dict:
    """Exact expansion of the normally ordered product as a commuting polynomial.

    Keys are exponents ``(p_a, p_b, r_a, r_b)`` of
    ``a^{dagger p_a} b^{dagger p_b} a^{r_a} b^{r_b}``; values are Gaussian
    integers ``(re, im)``.
    """
    poly = {(0, 0, 0, 0): (1, 0)}
    for p, c in enumerate(counts):
        for _ in range(c):
            nxt: dict = {}
            for key, coef in poly.items():
                for (mu, nu), entry in _PAULI_ENTRIES[p].items():
                    k = list(key)
                    k[mu] += 1
                    k[2 + nu] += 1
                    k = tuple(k)
                    prod = _gmul(coef, entry)
                    old = nxt.get(k, (0, 0))
                    nxt[k] = (old[0] + prod[0], old[1] + prod[1])
            poly = {k: v for k, v in nxt.items() if v != (0, 0)}
    return poly


def symmetrized_string_expectation_fock(s: PureState, counts: Sequence[int]) -> float:
    """Symmetrized expectation from the normally ordered mode-operator form."""
    counts = _check_counts(s, counts)
    lowered: dict = {}

    def lower(m):
        if m not in lowered:
            lowered[m] = apply_annihilation_monomial(s, m, normalized=False)
        return lowered[m]

    total = 0j
    for (pa, pb, ra, rb), (re, im) in normal_ordered_polynomial(counts).items():
        left, right = lower((pa, pb)), lower((ra, rb))
        overlap = sum(left[key].conjugate() * amp for key, amp in right.amps.items())
        total += complex(re, im) * overlap
    return total.real


def class_size(counts: Sequence[int]) -> int:
    """Number of distinct strings in a class, ``n! / (n_I! n_x! n_y! n_z!)``."""
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


@dataclass(frozen=True)
class FrameTensor:
    """Permutation-symmetric frame coefficients, stored per count class."""

    n: int
    classes: dict = field(default_factory=dict)

    def value(self, string: Sequence[int]) -> float:
        counts = [0, 0, 0, 0]
        for p in string:
            counts[p] += 1
        return self.classes.get(tuple(counts), 0.0)


def frame_coefficients(s: PureState) -> FrameTensor:
    """``t_{i_1..i_n} = Tr[sigma^{i_1} x ... x sigma^{i_n} rho] / 2^n`` per class."""
    if s.d != 2:
        raise ArgumentError("frame coefficients need a two-mode state")
    if 2 ** s.n > PARTICLE_LIMIT:
        raise CapacityError(f"2^{s.n} exceeds the frame limit")
    scale = math.factorial(s.n) * 2 ** s.n
    return FrameTensor(s.n, {c: symmetrized_string_expectation_fock(s, c) / scale
                             for c in count_classes(s.n)})


def reconstruct_density(t: FrameTensor, n: int | None = None) -> np.ndarray:
    """Assemble ``rho = sum_strings t_string sigma^string`` as a dense ``2^n`` matrix."""
    n = t.n if n is None else n
    if 4 ** n > PARTICLE_LIMIT * 16:
        raise CapacityError(f"4^{n} strings exceed the reconstruction limit")
    memo: dict = {}

    def partial(prefix: tuple, remaining: int) -> np.ndarray:
        # sum over completions of a prefix class; depends only on the prefix counts
        key = (prefix, remaining)
        if key in memo:
            return memo[key]
        if remaining == 0:
            out = np.array([[t.classes.get(prefix, 0.0)]], dtype=complex)
        else:
            out = 0
            for p in range(4):
                nxt = list(prefix)
                nxt[p] += 1
                out = out + np.kron(PAULI[p], partial(tuple(nxt), remaining - 1))
        memo[key] = out
        return out

    return partial((0, 0, 0, 0), n)
