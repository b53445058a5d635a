"""Moment invariants ``<vac| f^k f^{dagger k} |vac>``.

The moment of order ``k`` is the squared norm of ``f^{dagger k}|vac>``.  It
equals ``(kn)! / (n!)^k`` times the weight of ``|psi>^{tensor k}`` (particle
picture) on the fully symmetric subspace; :func:`symmetric_projection_norm`
computes that weight by brute force as an independent check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityError
from .fock import (PureState, _class_labels, basis_dimension, factorial_product,
                   from_polynomial, multinomial_factor, polynomial_multiply, to_particle_vector,
                   to_polynomial)

POWER_CAPACITY = 2_000_000
PROJECTION_CAPACITY = 10**8
DIRECT_CAPACITY = 10**7


def _check_power_capacity(s: PureState, k: int, capacity: int):
    size = basis_dimension(k * s.n, s.d)
    if size > capacity and len(s) ** k > capacity:
        raise CapacityError(f"power state with {k * s.n} photons in {s.d} modes "
                            f"may need {size} terms (> {capacity})")


def power_state(s: PureState, k: int, capacity: int = POWER_CAPACITY) -> PureState:
    """Unnormalized ``f^{dagger k} |vac>`` by repeated polynomial multiplication."""
    if k < 1:
        raise ValueError("power must be at least 1")
    _check_power_capacity(s, k, capacity)
    base = to_polynomial(s)
    poly = base
    for _ in range(k - 1):
        poly = polynomial_multiply(poly, base)
    return from_polynomial(poly, s.d, k * s.n)


def power_state_direct(s: PureState, k: int, capacity: int = DIRECT_CAPACITY) -> PureState:
    """Unnormalized ``f^{dagger k} |vac>`` summed term by term over k-tuples of kets.

    Each tuple ``(n1, ..., nk)`` contributes
    ``alpha_{n1} ... alpha_{nk} M(n1, ..., nk)`` to ``|n1 + ... + nk>``.
    """
    if k < 1:
        raise ValueError("power must be at least 1")
    if len(s) ** k > capacity:
        raise CapacityError(f"{len(s)}^{k} tuples exceed {capacity}")
    items = list(s.amps.items())
    out = {}
    for combo in itertools.product(items, repeat=k):
        keys = [key for key, _ in combo]
        coef = math.prod(amp for _, amp in combo) * multinomial_factor(keys)
        total = tuple(sum(col) for col in zip(*keys))
        out[total] = out.get(total, 0) + coef
    return PureState(out, d=s.d, n=k * s.n)


def moment(s: PureState, k: int, capacity: int = POWER_CAPACITY) -> float:
    """``<vac| f^k f^{dagger k} |vac>`` as ``sum_I |C_I|^2 prod_i I_i!``."""
    if k < 1:
        raise ValueError("power must be at least 1")
    _check_power_capacity(s, k, capacity)
    base = to_polynomial(s)
    poly = base
    for _ in range(k - 1):
        poly = polynomial_multiply(poly, base)
    return float(sum(abs(c) ** 2 * factorial_product(key) for key, c in poly.items()))


def symmetrization_factor(n: int, k: int) -> int:
    """``(kn)! / (n!)^k``, the largest possible moment for a normalized state."""
    return math.factorial(k * n) // math.factorial(n) ** k


def normalization_factor(n: int, k: int) -> Fraction:
    """Exact ratio between projection weight and moment, ``(n!)^k / (kn)!``."""
    return Fraction(1, symmetrization_factor(n, k))


def symmetric_projection_norm(s: PureState, k: int,
                              capacity: int = PROJECTION_CAPACITY) -> float:
    """``<psi|^{tensor k} P_sym |psi>^{tensor k}`` in the particle picture.

    The dense tensor power is built explicitly; its symmetric weight is
    ``sum_c |sum_{i in c} v_i|^2 / |c|`` over the permutation classes ``c``
    of particle indices.
    """
    size = s.d ** (k * s.n)
    if size > capacity:
        raise CapacityError(f"tensor power of size {size} exceeds {capacity}")
    single = to_particle_vector(s).data
    v = single
    for _ in range(k - 1):
        v = np.kron(v, single)
    labels, _ = _class_labels(s.d, k * s.n)
    sizes = np.bincount(labels)
    sums = np.bincount(labels, weights=v.real) + 1j * np.bincount(labels, weights=v.imag)
    return float(np.sum(np.abs(sums) ** 2 / sizes))


@dataclass(frozen=True)
class MomentRow:
    k: int
    moment: float
    projection: float | None
    bound: int

    @property
    def ratio_check(self) -> float | None:
        """Relative gap between ``moment`` and ``bound * projection``."""
        if self.projection is None:
            return None
        expected = self.bound * self.projection
        return abs(self.moment - expected) / max(abs(expected), 1e-300)


def moment_report(s: PureState, kmax: int,
                  projection_capacity: int = 10**6) -> list[MomentRow]:
    """Moments for ``k = 1 .. kmax`` with the brute-force projection where affordable.

    Projection entries above ``projection_capacity`` are reported as ``None``.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    rows = []
    for k in range(1, kmax + 1):
        m = moment(s, k)
        try:
            proj = symmetric_projection_norm(s, k, capacity=projection_capacity)
        except CapacityError:
            proj = None
        rows.append(MomentRow(k, m, proj, symmetrization_factor(s.n, k)))
    return rows
