"""Fock-state algebra for n photons in d modes.

A state is stored as a sparse map from occupation tuples ``(n_1, ..., n_d)``
to complex amplitudes in the normalized Fock basis.  Mode indices are 0-based
internally; user-facing text (kets, reports) uses the photon counts directly,
so no index translation is ever needed for kets.

Besides the amplitude picture, the *polynomial picture* is used throughout:
``|psi> = f^dagger |vacuum>`` with ``f^dagger = sum_n c_n prod_i (a_i^dagger)^{n_i}``
and ``c_n = alpha_n / sqrt(prod_i n_i!)``.  Products of states, powers and
mode substitutions are plain polynomial arithmetic in that picture.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

import numpy as np

from .errors import CapacityError, DimensionError, SymmetryError

ZERO_CUTOFF = 1e-15
NORMALIZED_TOL = 1e-12
PARTICLE_CAPACITY = 10**8

MultiIndex = tuple[int, ...]


@lru_cache(maxsize=None)
def fock_basis(n: int, d: int) -> tuple[MultiIndex, ...]:
    """All occupation tuples with ``n`` photons in ``d`` modes.

    The order is descending lexicographic, e.g. ``(2,0), (1,1), (0,2)``; the
    same order is used for block matrices and for serialized states.
    """
    if d < 1:
        raise DimensionError("need at least one mode")
    if n < 0:
        raise DimensionError("photon number must be non-negative")
    if d == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in fock_basis(n - first, d - 1):
            out.append((first,) + rest)
    return tuple(out)


def basis_dimension(n: int, d: int) -> int:
    return math.comb(n + d - 1, d - 1)


def _sort_key(index: MultiIndex):
    return tuple(-c for c in index)


def factorial_product(index: Iterable[int]) -> int:
    out = 1
    for c in index:
        out *= math.factorial(c)
    return out


def multinomial_factor_squared(indices: Sequence[Sequence[int]]) -> int:
    """Exact square of :func:`multinomial_factor` as an integer."""
    if not indices:
        return 1
    d = len(indices[0])
    if any(len(ix) != d for ix in indices):
        raise DimensionError("all multi-indices must have the same length")
    out = 1
    for mode in range(d):
        column = [ix[mode] for ix in indices]
        out *= math.factorial(sum(column)) // factorial_product(column)
    return out


def multinomial_factor(indices: Sequence[Sequence[int]]) -> float:
    """Combinatorial factor relating a product of normalized monomials to one.

    ``a~_{n1} ... a~_{nk} = M(n1, ..., nk) a~_{n1 + ... + nk}`` with
    ``M = prod_l sqrt((sum_m n_l^(m))! / prod_m n_l^(m)!)``.

    Args:
        indices: multi-indices of equal length.

    Returns:
        The positive real factor ``M``.
    """
    return math.sqrt(multinomial_factor_squared(indices))


class PureState:
    """Pure state of a fixed number of photons in ``d`` modes.

    Instances are immutable.  Amplitudes below ``1e-15`` in modulus are
    dropped on construction, so two states with the same support compare
    term by term.

    Args:
        amps: mapping from occupation tuples to complex amplitudes.
        d: number of modes; inferred from the keys when omitted.
        n: photon number; inferred from the keys when omitted.
    """

    __slots__ = ("_d", "_n", "_amps")

    def __init__(self, amps: Mapping[Sequence[int], complex], d: int | None = None,
                 n: int | None = None):
        clean = {}
        for key, value in amps.items():
            key = tuple(int(c) for c in key)
            value = complex(value)
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ValueError(f"non-finite amplitude for {key}")
            if d is None:
                d = len(key)
            if n is None:
                n = sum(key)
            if len(key) != d:
                raise DimensionError(f"ket {key} does not have {d} modes")
            if any(c < 0 for c in key):
                raise DimensionError(f"negative photon count in {key}")
            if sum(key) != n:
                raise DimensionError(f"ket {key} does not carry {n} photons")
            if abs(value) <= ZERO_CUTOFF:
                continue
            clean[key] = clean.get(key, 0) + value
        if d is None or n is None:
            raise DimensionError("empty state needs explicit d and n")
        if d < 1:
            raise DimensionError("need at least one mode")
        self._d = int(d)
        self._n = int(n)
        self._amps = {k: clean[k] for k in sorted(clean, key=_sort_key)
                      if abs(clean[k]) > ZERO_CUTOFF}

    # construction helpers -------------------------------------------------

    @classmethod
    def fock(cls, counts: Sequence[int]) -> "PureState":
        return cls({tuple(counts): 1.0})

    @classmethod
    def vacuum(cls, d: int) -> "PureState":
        return cls({(0,) * d: 1.0})

    @classmethod
    def zero(cls, d: int, n: int) -> "PureState":
        return cls({}, d=d, n=n)

    @classmethod
    def from_vector(cls, vector, d: int, n: int) -> "PureState":
        """Inverse of :meth:`to_vector` on the basis ``fock_basis(n, d)``."""
        basis = fock_basis(n, d)
        vector = np.asarray(vector)
        if vector.shape != (len(basis),):
            raise DimensionError("vector length does not match the Fock basis")
        return cls(dict(zip(basis, vector)), d=d, n=n)

    # basic properties -----------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def n(self) -> int:
        return self._n

    @property
    def amps(self) -> Mapping[MultiIndex, complex]:
        return MappingProxyType(self._amps)

    def __len__(self):
        return len(self._amps)

    def __iter__(self):
        return iter(self._amps.items())

    def __getitem__(self, key) -> complex:
        return self._amps.get(tuple(key), 0j)

    def norm_squared(self) -> float:
        return float(sum(abs(v) ** 2 for v in self._amps.values()))

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def is_normalized(self, tol: float = NORMALIZED_TOL) -> bool:
        return abs(self.norm_squared() - 1.0) <= tol

    def is_zero(self) -> bool:
        return not self._amps

    def normalized(self) -> "PureState":
        nrm = self.norm()
        if nrm == 0:
            raise ValueError("cannot normalize the zero state")
        return self * (1.0 / nrm)

    def conj(self) -> "PureState":
        return PureState({k: v.conjugate() for k, v in self._amps.items()}, self._d, self._n)

    def to_vector(self) -> np.ndarray:
        """Dense amplitude vector in the order of ``fock_basis(n, d)``."""
        basis = fock_basis(self._n, self._d)
        return np.array([self._amps.get(k, 0j) for k in basis], dtype=complex)

    # arithmetic -----------------------------------------------------------

    def _check_compatible(self, other: "PureState"):
        if self._d != other._d or self._n != other._n:
            raise DimensionError(
                f"states live in different spaces: (d={self._d}, n={self._n}) "
                f"vs (d={other._d}, n={other._n})")

    def __add__(self, other: "PureState") -> "PureState":
        if not isinstance(other, PureState):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._amps)
        for k, v in other._amps.items():
            out[k] = out.get(k, 0) + v
        return PureState(out, self._d, self._n)

    def __sub__(self, other: "PureState") -> "PureState":
        if not isinstance(other, PureState):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self) -> "PureState":
        return (-1) * self

    def __mul__(self, scalar) -> "PureState":
        if isinstance(scalar, PureState):
            return NotImplemented
        scalar = complex(scalar)
        return PureState({k: scalar * v for k, v in self._amps.items()}, self._d, self._n)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "PureState":
        return self * (1.0 / complex(scalar))

    def allclose(self, other: "PureState", atol: float = 1e-12) -> bool:
        """Entrywise amplitude comparison (phase sensitive)."""
        if self._d != other._d or self._n != other._n:
            return False
        keys = set(self._amps) | set(other._amps)
        return all(abs(self[k] - other[k]) <= atol for k in keys)

    def __repr__(self):
        from .expr import format_state
        return f"PureState({format_state(self)!r})"


def inner_product(a: PureState, b: PureState) -> complex:
    """``<a|b>``, antilinear in the first argument."""
    if a.d != b.d or a.n != b.n:
        raise DimensionError("inner product of states from different spaces")
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    total = 0j
    for key in small.amps:
        total += a[key].conjugate() * b[key]
    return total


def fidelity(a: PureState, b: PureState) -> float:
    """Phase-insensitive overlap ``|<a|b>|^2 / (<a|a><b|b>)``."""
    na, nb = a.norm_squared(), b.norm_squared()
    if na == 0 or nb == 0:
        return 0.0
    return abs(inner_product(a, b)) ** 2 / (na * nb)


# --- polynomial picture ------------------------------------------------------

Polynomial = dict  # MultiIndex -> complex, coefficients of prod (a_i^dagger)^{n_i}


def to_polynomial(s: PureState) -> Polynomial:
    return {k: v / math.sqrt(factorial_product(k)) for k, v in s.amps.items()}


def from_polynomial(poly: Polynomial, d: int, n: int) -> PureState:
    return PureState({k: v * math.sqrt(factorial_product(k)) for k, v in poly.items()}, d, n)


def polynomial_multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for kp, vp in p.items():
        for kq, vq in q.items():
            key = tuple(x + y for x, y in zip(kp, kq))
            out[key] = out.get(key, 0) + vp * vq
    return out


def multiply_states(states: Sequence[PureState]) -> PureState:
    """Unnormalized product state ``f_1^dagger ... f_k^dagger |vacuum>``.

    All factors must share the mode count; photon numbers add up.
    """
    if not states:
        raise ValueError("need at least one state")
    d = states[0].d
    if any(s.d != d for s in states):
        raise DimensionError("all factors must have the same number of modes")
    poly = to_polynomial(states[0])
    for s in states[1:]:
        poly = polynomial_multiply(poly, to_polynomial(s))
    return from_polynomial(poly, d, sum(s.n for s in states))


# --- particle picture --------------------------------------------------------

@dataclass(frozen=True)
class ParticleVector:
    """Dense vector in ``(C^d)^{tensor n}``, row-major over ``(i_1, ..., i_n)``."""

    d: int
    n: int
    data: np.ndarray

    def tensor(self) -> np.ndarray:
        return self.data.reshape((self.d,) * self.n) if self.n else self.data.reshape(())

    def norm(self) -> float:
        return float(np.linalg.norm(self.data))


def occupation_classes(d: int, n: int) -> np.ndarray:
    """Occupation tuple of every particle-basis index, shape ``(d**n, d)``."""
    size = d ** n
    counts = np.zeros((size, d), dtype=np.int64)
    idx = np.arange(size, dtype=np.int64)
    for _ in range(n):
        idx, digit = np.divmod(idx, d)
        counts[np.arange(size), digit] += 1
    return counts


def _class_labels(d: int, n: int):
    """Integer label per particle index plus the occupation tuple of each label."""
    counts = occupation_classes(d, n)
    weights = (n + 1) ** np.arange(d - 1, -1, -1, dtype=np.int64)
    keys = counts @ weights
    uniq, labels = np.unique(keys, return_inverse=True)
    first = np.zeros(len(uniq), dtype=np.int64)
    first[labels[::-1]] = np.arange(len(labels))[::-1]
    return labels, counts[first]


def to_particle_vector(s: PureState, capacity: int = PARTICLE_CAPACITY) -> ParticleVector:
    """First-quantized form of a state.

    ``|n>`` maps to ``sqrt(prod n_i! / n!)`` times the sum of all distinct
    orderings of ``|1>^{n_1} ... |d>^{n_d}``.
    """
    size = s.d ** s.n
    if size > capacity:
        raise CapacityError(f"particle vector of size {size} exceeds {capacity}")
    labels, class_counts = _class_labels(s.d, s.n)
    lookup = {tuple(int(c) for c in row): i for i, row in enumerate(class_counts)}
    per_class = np.zeros(len(class_counts), dtype=complex)
    nfact = math.factorial(s.n)
    for key, amp in s.amps.items():
        per_class[lookup[key]] = amp * math.sqrt(factorial_product(key) / nfact)
    return ParticleVector(s.d, s.n, per_class[labels])


def from_particle_vector(v: ParticleVector, tol: float = 1e-9) -> PureState:
    """Inverse of :func:`to_particle_vector`.

    Raises:
        SymmetryError: if two entries related by a permutation of particles
            differ by more than ``tol``; the offending index pair is attached.
    """
    data = np.asarray(v.data, dtype=complex).ravel()
    if data.shape != (v.d ** v.n,):
        raise DimensionError("particle vector has the wrong length")
    labels, class_counts = _class_labels(v.d, v.n)
    sizes = np.bincount(labels)
    sums = np.bincount(labels, weights=data.real) + 1j * np.bincount(labels, weights=data.imag)
    means = sums / sizes
    deviation = np.abs(data - means[labels])
    worst = int(np.argmax(deviation)) if data.size else 0
    if data.size and deviation[worst] > tol:
        same = np.flatnonzero(labels == labels[worst])
        partner = int(same[np.argmax(np.abs(data[same] - data[worst]))])
        pair = (np.unravel_index(worst, (v.d,) * v.n), np.unravel_index(partner, (v.d,) * v.n))
        pair = tuple(tuple(int(i) for i in p) for p in pair)
        gap = float(abs(data[worst] - data[partner]))
        raise SymmetryError(f"vector is not permutation symmetric: entries {pair[0]} and "
                            f"{pair[1]} differ by {gap:.3g}", pair=pair, violation=gap)
    nfact = math.factorial(v.n)
    amps = {}
    for label, row in enumerate(class_counts):
        key = tuple(int(c) for c in row)
        amps[key] = means[label] * math.sqrt(nfact / factorial_product(key))
    return PureState(amps, d=v.d, n=v.n)
