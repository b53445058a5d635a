"""Two-mode states as constellations of points on the Bloch sphere.

The creation polynomial of an ``n``-photon two-mode state factors into
``n`` linear forms ``cos(t/2) a_1^dagger + e^{i p} sin(t/2) a_2^dagger``.
Each factor is a star at polar angle ``t`` and azimuth ``p``.  A mode
unitary rotates every star by the same SO(3) element, so two states are
related by linear optics exactly when their constellations are related by a
proper rotation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .fock import PureState, from_polynomial, inner_product, polynomial_multiply
from .modes import ModeUnitary, apply_mode_unitary

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
DEGENERACY_TOL = 1e-12
CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class Constellation:
    """``n`` unit vectors, repeated for multiple stars."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float).reshape(-1, 3)
        if pts.size and np.max(np.abs(np.linalg.norm(pts, axis=1) - 1)) > 1e-10:
            raise ArgumentError("constellation points must be unit vectors")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    @classmethod
    def from_angles(cls, angles) -> "Constellation":
        angles = np.asarray(angles, dtype=float).reshape(-1, 2)
        t, p = angles[:, 0], angles[:, 1]
        return cls(np.column_stack([np.sin(t) * np.cos(p), np.sin(t) * np.sin(p), np.cos(t)]))

    def angles(self) -> np.ndarray:
        """``(theta, phi)`` per star, ``theta`` in ``[0, pi]`` and ``phi`` in ``(-pi, pi]``."""
        x, y, z = self.points.T
        return np.column_stack([np.arccos(np.clip(z, -1, 1)), np.arctan2(y, x)])

    def rotated(self, rotation) -> "Constellation":
        return Constellation(self.points @ np.asarray(rotation).T)


def _bloch(x: complex) -> np.ndarray:
    # star of the root x of the dehomogenized polynomial, x = -e^{i phi} tan(theta/2)
    r = abs(x)
    theta = 2 * math.atan(r)
    phi = math.atan2((-x).imag, (-x).real) if r > 0 else 0.0
    return np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi),
                     math.cos(theta)])


def _cluster(points: np.ndarray, tol: float) -> np.ndarray:
    # replace near-coincident stars (numerically split multiple roots) by their mean
    n = len(points)
    group = list(range(n))

    def find(i):
        while group[i] != i:
            group[i] = group[group[i]]
            i = group[i]
        return i

    for i, j in itertools.combinations(range(n), 2):
        if np.linalg.norm(points[i] - points[j]) <= tol:
            group[find(i)] = find(j)
    out = points.copy()
    roots = np.array([find(i) for i in range(n)])
    for root in set(roots.tolist()):
        members = np.flatnonzero(roots == root)
        if len(members) > 1:
            mean = points[members].mean(axis=0)
            out[members] = mean / np.linalg.norm(mean)
    return out


def constellation(s: PureState, cluster_tol: float = CLUSTER_TOL) -> Constellation:
    """Stars of a two-mode state.

    Roots of ``sum_j c_j x^j`` (``c_j`` the coefficient of
    ``a_1^{dagger j} a_2^{dagger n-j}``) come from the eigenvalues of the
    companion matrix.  Each vanishing leading coefficient adds a star at the
    south pole.

    Raises:
        ArgumentError: zero state or ``d != 2``.
    """
    if s.d != 2:
        raise ArgumentError("stellar representation needs exactly two modes")
    if s.is_zero():
        raise ArgumentError("the zero state has no constellation")
    n = s.n
    c = np.array([s[(j, n - j)] / math.sqrt(math.factorial(j) * math.factorial(n - j))
                  for j in range(n + 1)])
    cutoff = DEGENERACY_TOL * s.norm()
    degree = n
    while abs(c[degree]) <= cutoff:
        degree -= 1
    points = [np.array([0.0, 0.0, -1.0])] * (n - degree)
    if degree > 0:
        monic = c[:degree] / c[degree]
        companion = np.zeros((degree, degree), dtype=complex)
        companion[1:, :-1] = np.eye(degree - 1)
        companion[:, -1] = -monic
        points.extend(_bloch(x) for x in np.linalg.eigvals(companion))
    pts = np.array(points).reshape(-1, 3)
    return Constellation(_cluster(pts, cluster_tol) if cluster_tol > 0 else pts)


def state_from_constellation(c: Constellation) -> PureState:
    """Normalized state whose creation polynomial is the product of the stars' factors."""
    if len(c) < 1:
        raise ArgumentError("need at least one star")
    poly = {(0, 0): 1.0 + 0j}
    for t, p in c.angles():
        poly = polynomial_multiply(poly, {(1, 0): math.cos(t / 2),
                                          (0, 1): np.exp(1j * p) * math.sin(t / 2)})
    return from_polynomial(poly, 2, len(c)).normalized()


def so3_of(u) -> np.ndarray:
    """Rotation ``R[a, b] = Tr(sigma_a U sigma_b U^dagger) / 2`` induced by a 2x2 unitary."""
    u = np.asarray(u.matrix if isinstance(u, ModeUnitary) else u)
    return np.array([[0.5 * np.trace(PAULI[a] @ u @ PAULI[b] @ u.conj().T).real
                      for b in range(3)] for a in range(3)])


def su2_preimages(rotation) -> tuple[np.ndarray, np.ndarray]:
    """The two SU(2) elements whose rotation is ``rotation`` (axis-angle, half angle)."""
    r = np.asarray(rotation, dtype=float)
    cos_angle = np.clip((np.trace(r) - 1) / 2, -1, 1)
    angle = math.acos(cos_angle)
    if angle < 1e-12:
        w = np.eye(2, dtype=complex)
        return w, -w
    if math.pi - angle < 1e-6:
        # near half-turn: axis from the symmetric part
        m = (r + np.eye(3)) / 2
        col = int(np.argmax(np.diag(m)))
        axis = m[:, col] / math.sqrt(m[col, col])
        # fix the sign with the antisymmetric part where it is resolvable
        skew = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
        if np.dot(skew, axis) < 0:
            axis = -axis
    else:
        axis = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
        axis /= 2 * math.sin(angle)
    axis /= np.linalg.norm(axis)
    gen = sum(a * p for a, p in zip(axis, PAULI))
    w = math.cos(angle / 2) * np.eye(2) - 1j * math.sin(angle / 2) * gen
    return w, -w


def _frame(p, q):
    e1 = p / np.linalg.norm(p)
    e2 = q - np.dot(q, e1) * e1
    e2 /= np.linalg.norm(e2)
    return np.column_stack([e1, e2, np.cross(e1, e2)])


def _align(v, u):
    """Smallest rotation taking unit vector ``v`` to ``u``."""
    axis = np.cross(v, u)
    s, c = np.linalg.norm(axis), float(np.dot(v, u))
    if s < 1e-15:
        if c > 0:
            return np.eye(3)
        perp = np.cross(v, [1.0, 0, 0] if abs(v[0]) < 0.9 else [0, 1.0, 0])
        perp /= np.linalg.norm(perp)
        return 2 * np.outer(perp, perp) - np.eye(3)
    k = axis / s
    kx = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + s * kx + (1 - c) * kx @ kx


def _maps_onto(rotation, src: np.ndarray, dst: np.ndarray, tol: float) -> bool:
    # greedy nearest matching, ties broken by index order
    moved = src @ rotation.T
    free = np.ones(len(dst), dtype=bool)
    for p in moved:
        dist = np.linalg.norm(dst - p, axis=1)
        dist[~free] = np.inf
        j = int(np.argmin(dist))
        if dist[j] > tol:
            return False
        free[j] = False
    return True


def rotation_match(c1: Constellation, c2: Constellation, tol: float = 1e-7):
    """Proper rotation ``R`` with ``R c1 == c2`` as multisets, or ``None``.

    A reference pair of non-parallel stars is fixed in ``c2``; every ordered
    pair of ``c1`` with the same scalar product defines one candidate
    rotation, which is accepted if it carries all stars of ``c1`` onto
    distinct stars of ``c2``.  Constellations whose stars all lie on one
    axis are aligned directly (the spin about the axis is set to zero).
    """
    if len(c1) != len(c2):
        raise ArgumentError(f"constellations have {len(c1)} and {len(c2)} stars")
    v, u = c1.points, c2.points
    if len(u) == 0:
        return np.eye(3)
    best, ref = 0.0, None
    for a, b in itertools.permutations(range(len(u)), 2):
        cross = np.linalg.norm(np.cross(u[a], u[b]))
        if cross > best + 1e-15:
            best, ref = cross, (a, b)
    if ref is None or best <= tol:
        for i in range(len(v)):
            if np.linalg.norm(np.cross(v[0], v[i])) > tol:
                return None
        for target in (u[0], -u[0]):
            r = _align(v[0], target)
            if _maps_onto(r, v, u, tol):
                return r
        return None
    u1, u2 = u[ref[0]], u[ref[1]]
    dot = float(np.dot(u1, u2))
    target = _frame(u1, u2)
    for i, j in itertools.permutations(range(len(v)), 2):
        if abs(float(np.dot(v[i], v[j])) - dot) > tol:
            continue
        if np.linalg.norm(np.cross(v[i], v[j])) <= tol:
            continue
        r = target @ _frame(v[i], v[j]).T
        if _maps_onto(r, v, u, tol):
            return r
    return None


def equivalent_d2(s1: PureState, s2: PureState, tol: float = 1e-7) -> ModeUnitary | None:
    """Certify that ``s2`` is reachable from ``s1`` by a two-mode unitary.

    Returns:
        A :class:`ModeUnitary` ``V`` with ``|<s2|V s1>| >= 1 - 10 tol`` (for
        normalized inputs), or ``None`` when the constellations are not
        related by a proper rotation.
    """
    if s1.d != 2 or s2.d != 2:
        raise ArgumentError("Majorana equivalence needs two-mode states")
    if s1.n != s2.n:
        raise ArgumentError(f"photon numbers differ: {s1.n} vs {s2.n}")
    a, b = s1.normalized(), s2.normalized()
    if s1.n == 0:
        return ModeUnitary(np.eye(2))
    r = rotation_match(constellation(a), constellation(b), tol)
    if r is None:
        return None
    for w in su2_preimages(r):
        v = ModeUnitary(w)
        if abs(inner_product(b, apply_mode_unitary(v, a))) >= 1 - 10 * tol:
            return v
    return None
