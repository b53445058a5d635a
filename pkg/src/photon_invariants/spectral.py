"""Spectral invariants: the photon-number blocks of ``f f^dagger``.

Row ``k'`` and column ``k`` of block ``k`` hold the correlator
``<psi| a~_{k'} a~^dagger_{k} |psi> = <a~^dagger_{k'} psi | a~^dagger_{k} psi>``,
with ``k, k'`` running over ``fock_basis(k, d)``.  Sorted spectra of these
blocks are unchanged by any mode unitary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, NumericError
from .fock import PureState, basis_dimension, fock_basis
from .modes import apply_annihilation_monomial, apply_creation_monomial

log = logging.getLogger(__name__)

BLOCK_CAPACITY = 2000
HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-8
RESIDUAL_TOL = 1e-10
SPECTRUM_TOL = 1e-8


@dataclass(frozen=True)
class HermitianBlock:
    """The ``k``-photon block of ``f f^dagger`` for a ``d``-mode state."""

    k: int
    d: int
    indices: tuple
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial of a block.

    ``coeffs`` are the coefficients of the monic ``det(lambda I - B)``,
    highest degree first.  Calling the object evaluates the determinant form
    ``w(lambda) = det(B - lambda I) = (-1)^dim det(lambda I - B)``.
    """

    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def trace(self) -> float:
        return float(-self.coeffs[1]) if self.degree >= 1 else 0.0

    @property
    def determinant(self) -> float:
        return float((-1) ** self.degree * self.coeffs[-1])

    def __call__(self, lam):
        return (-1) ** self.degree * np.polyval(self.coeffs, lam)

    def elementary_symmetric(self) -> np.ndarray:
        """``e_0 .. e_dim`` of the eigenvalues (all non-negative for a PSD block)."""
        signs = (-1.0) ** np.arange(self.degree + 1)
        return signs * self.coeffs


def block(s: PureState, k: int, capacity: int = BLOCK_CAPACITY) -> HermitianBlock:
    """Build the ``k``-photon block of ``f f^dagger``.

    Args:
        s: the state; a warning is logged if it is not normalized.
        k: photon number of the block.
        capacity: maximum block dimension.

    Raises:
        CapacityError: block dimension above ``capacity``.
    """
    if k < 0:
        raise ValueError("block photon number must be non-negative")
    dim = basis_dimension(k, s.d)
    if dim > capacity:
        raise CapacityError(f"block k={k} has dimension {dim} > {capacity}")
    if not s.is_normalized(1e-10):
        log.warning("building a block for an unnormalized state (norm^2 = %.6g)",
                    s.norm_squared())
    indices = fock_basis(k, s.d)
    # rows: only the (n+k)-photon kets actually reached
    images = [apply_creation_monomial(s, m).amps for m in indices]
    position: dict = {}
    for image in images:
        for key in image:
            position.setdefault(key, len(position))
    columns = np.zeros((len(position), dim), dtype=complex)
    for col, image in enumerate(images):
        for key, amp in image.items():
            columns[position[key], col] = amp
    matrix = columns.conj().T @ columns
    matrix = (matrix + matrix.conj().T) / 2
    matrix.setflags(write=False)
    return HermitianBlock(k, s.d, indices, matrix)


def block_spectrum(b: HermitianBlock) -> np.ndarray:
    """Eigenvalues of a block in descending order.

    Values within ``1e-8`` below zero are clipped to zero.

    Raises:
        NumericError: if the solver fails or misses the residual bound.
    """
    a = b.matrix
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed on block k={b.k}: {exc}") from exc
    scale = max(np.linalg.norm(a, 2), 1.0)
    residual = float(np.max(np.linalg.norm(a @ v - v * w, axis=0))) if len(w) else 0.0
    if residual > RESIDUAL_TOL * scale:
        raise NumericError(f"eigen-residual {residual:.3g} too large on block k={b.k}",
                           residual=residual)
    if len(w) and w[0] < -PSD_TOL * scale:
        raise NumericError(f"block k={b.k} has a negative eigenvalue {w[0]:.3g}")
    w = np.where((w < 0) & (w >= -PSD_TOL * scale), 0.0, w)
    return w[::-1].copy()


def char_poly(b: HermitianBlock) -> CharPoly:
    """Characteristic polynomial expanded from the block spectrum."""
    return CharPoly(np.real(np.poly(block_spectrum(b))) if b.dim else np.ones(1))


def power_traces(b: HermitianBlock, lmax: int) -> np.ndarray:
    """``Tr[B^l]`` for ``l = 1 .. lmax``."""
    if lmax < 1:
        raise ValueError("lmax must be at least 1")
    w = block_spectrum(b)
    return np.array([np.sum(w ** l) for l in range(1, lmax + 1)])


def newton_power_sums(cp: CharPoly, lmax: int) -> np.ndarray:
    """Power sums ``p_1 .. p_lmax`` recovered from the characteristic polynomial.

    Uses Newton's identities ``p_l = sum_{i<l} (-1)^{i-1} e_i p_{l-i}
    + (-1)^{l-1} l e_l`` (with ``e_l = 0`` beyond the degree).
    """
    e = cp.elementary_symmetric()
    deg = cp.degree
    p = np.zeros(lmax + 1)
    for l in range(1, lmax + 1):
        total = (-1) ** (l - 1) * l * e[l] if l <= deg else 0.0
        for i in range(1, min(l, deg + 1)):
            total += (-1) ** (i - 1) * e[i] * p[l - i]
        p[l] = total
    return p[1:]


@dataclass(frozen=True)
class SpectralRow:
    k: int
    spectrum: np.ndarray
    charpoly: CharPoly


def spectral_report(s: PureState, kmax: int | None = None) -> list[SpectralRow]:
    """Spectra and characteristic polynomials of blocks ``0 .. kmax`` (default ``n``)."""
    if kmax is None:
        kmax = s.n
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    rows = []
    for k in range(kmax + 1):
        b = block(s, k)
        spec = block_spectrum(b)
        rows.append(SpectralRow(k, spec, CharPoly(np.real(np.poly(spec)))))
    return rows


def spectra_close(a, b, tol: float = SPECTRUM_TOL) -> bool:
    """Sorted-vector max-norm comparison."""
    a, b = np.sort(np.asarray(a)), np.sort(np.asarray(b))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= tol))


def one_body_density(s: PureState) -> np.ndarray:
    """Single-particle correlation matrix ``rho[i, j] = <a_j^dagger a_i>`` (trace ``n``).

    Related to the first block by ``block(s, 1) = rho + identity`` for a
    normalized state.
    """
    d = s.d
    rho = np.zeros((d, d), dtype=complex)
    if s.n == 0:
        return rho
    lowered = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        lowered.append(apply_annihilation_monomial(s, e))
    for i in range(d):
        for j in range(d):
            # <a_j^dagger a_i> = <a_j psi | a_i psi>
            rho[i, j] = sum(lowered[j][key].conjugate() * amp
                            for key, amp in lowered[i].amps.items())
    return rho
