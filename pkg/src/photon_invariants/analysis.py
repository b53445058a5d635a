"""Invariant reports, equivalence verdicts and the three-qubit Jacobian test."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .catalog import acin3
from .fock import PureState
from .majorana import equivalent_d2
from .modes import ModeUnitary
from .moments import moment, moment_report
from .spectral import block, block_spectrum, char_poly, spectra_close

DEFAULT_TOL = 1e-8
CERT_TOL = 1e-8


def invariants_report(s: PureState, kmax_block: int = 2, kmax_moment: int = 3) -> dict:
    """Block spectra, characteristic polynomials and moments of one state."""
    blocks = []
    for k in range(kmax_block + 1):
        b = block(s, k)
        spec = block_spectrum(b)
        cp = char_poly(b)
        blocks.append({"k": k, "dim": b.dim, "eigenvalues": spec, "charpoly_coeffs": cp.coeffs})
    moments = [{"k": row.k, "value": row.moment, "projection": row.projection,
                "projection_bound": row.bound}
               for row in moment_report(s, kmax_moment)]
    return {"n": s.n, "d": s.d, "norm": s.norm(), "blocks": blocks, "moments": moments}


class Verdict(enum.Enum):
    DISTINGUISHED = "DISTINGUISHED"
    CERTIFIED_EQUIVALENT = "CERTIFIED_EQUIVALENT"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of :func:`equiv`.

    ``witness`` names the first differing invariant for ``DISTINGUISHED``;
    ``unitary`` carries the certificate for ``CERTIFIED_EQUIVALENT``.
    """

    verdict: Verdict
    witness: dict | None = None
    unitary: ModeUnitary | None = None
    kmax: int = 0
    notes: list = field(default_factory=list)


def equiv(s1: PureState, s2: PureState, kmax: int = 3, tol: float = DEFAULT_TOL) -> EquivVerdict:
    """Try to separate two states by invariants, then certify when ``d == 2``.

    Block spectra are compared first (``k = 0 .. kmax``, max-norm ``tol``),
    then moments (``k = 1 .. kmax``, relative ``tol``).  Two-mode states
    whose invariants agree go through the stellar certificate; otherwise
    the result is inconclusive.
    """
    if (s1.d, s1.n) != (s2.d, s2.n):
        return EquivVerdict(Verdict.DISTINGUISHED,
                            {"invariant": "photon count/modes",
                             "values": [[s1.n, s1.d], [s2.n, s2.d]]}, kmax=kmax)
    for k in range(kmax + 1):
        a, b = block_spectrum(block(s1, k)), block_spectrum(block(s2, k))
        if not spectra_close(a, b, tol):
            return EquivVerdict(Verdict.DISTINGUISHED,
                                {"invariant": "block_spectrum", "k": k, "values": [a, b]},
                                kmax=kmax)
    for k in range(1, kmax + 1):
        a, b = moment(s1, k), moment(s2, k)
        if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
            return EquivVerdict(Verdict.DISTINGUISHED,
                                {"invariant": "moment", "k": k, "values": [a, b]}, kmax=kmax)
    notes = []
    if s1.d == 2:
        # certificate overlap threshold is 1 - 10 * CERT_TOL = 1 - 1e-7
        cert = equivalent_d2(s1, s2, tol=CERT_TOL)
        if cert is not None:
            return EquivVerdict(Verdict.CERTIFIED_EQUIVALENT, unitary=cert, kmax=kmax)
        notes.append("stellar certificate: no proper rotation relates the constellations")
    return EquivVerdict(Verdict.INCONCLUSIVE, kmax=kmax, notes=notes)


ACIN3_POINT = (1.0, 1.0, 1.0, math.pi / 4)


def acin3_invariants(params, kmax_moments: int = 5, kmax_blocks: int = 2) -> np.ndarray:
    """Moments ``1..kmax_moments`` then non-leading char-poly coefficients of blocks.

    The state is left unnormalized: the norm is one of the four parameters
    of the family.  Block coefficients enter as the elementary symmetric
    functions of the spectrum.
    """
    s = acin3(*params)
    out = [moment(s, k) for k in range(1, kmax_moments + 1)]
    for k in range(kmax_blocks + 1):
        out.extend(char_poly(block(s, k)).elementary_symmetric()[1:])
    return np.array(out, dtype=float)


@dataclass(frozen=True)
class RankResult:
    rank: int
    singular_values: np.ndarray
    jacobian: np.ndarray


def jacobian_rank(kmax_moments: int = 5, kmax_blocks: int = 2, point=ACIN3_POINT,
                  step: float = 1e-5, rel_threshold: float = 1e-6) -> RankResult:
    """Numerical rank of the invariant map of the ``acin3`` family.

    Central differences with ``step``; each row is divided by the magnitude
    of its invariant (a log-derivative) so rows of very different size
    compete fairly; rank counts singular values above
    ``rel_threshold * sigma_max``.  Pass ``kmax_moments=0`` or
    ``kmax_blocks=-1`` to drop a family.
    """
    import logging
    x0 = np.asarray(point, dtype=float)
    quiet = logging.getLogger("photon_invariants.spectral")
    previous = quiet.level
    quiet.setLevel(logging.ERROR)
    try:
        f0 = acin3_invariants(x0, kmax_moments, kmax_blocks)
        cols = []
        for e in np.eye(len(x0)):
            hi = acin3_invariants(x0 + step * e, kmax_moments, kmax_blocks)
            lo = acin3_invariants(x0 - step * e, kmax_moments, kmax_blocks)
            cols.append((hi - lo) / (2 * step))
    finally:
        quiet.setLevel(previous)
    jac = np.array(cols).T / np.maximum(np.abs(f0), 1e-300)[:, None]
    sv = np.linalg.svd(jac, compute_uv=False)
    rank = int(np.sum(sv > rel_threshold * sv[0])) if sv.size and sv[0] > 0 else 0
    return RankResult(rank, sv, jac)
