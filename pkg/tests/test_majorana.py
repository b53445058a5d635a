import math

import numpy as np
import pytest
from conftest import random_state
from hypothesis import given, settings, strategies as st

from photon_invariants.catalog import hom_target
from photon_invariants.errors import ArgumentError
from photon_invariants.fock import PureState, fidelity, inner_product
from photon_invariants.majorana import (Constellation, constellation, equivalent_d2, rotation_match,
                                        so3_of, state_from_constellation, su2_preimages)
from photon_invariants.modes import apply_mode_unitary, haar_random_unitary

NORTH, SOUTH = [0, 0, 1], [0, 0, -1]


def same_multiset(a, b, tol):
    a, b = np.asarray(a), list(np.asarray(b))
    for p in a:
        dist = [np.linalg.norm(p - q) for q in b]
        j = int(np.argmin(dist))
        if dist[j] > tol:
            return False
        b.pop(j)
    return True


def random_constellation(rng, n):
    v = rng.normal(size=(n, 3))
    return Constellation(v / np.linalg.norm(v, axis=1, keepdims=True))


def random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    return q if np.linalg.det(q) > 0 else -q


def test_constellation_examples():
    assert same_multiset(constellation(PureState.fock((1, 1))).points, [NORTH, SOUTH], 1e-12)
    assert same_multiset(constellation(PureState.fock((3, 0))).points, [NORTH] * 3, 1e-12)
    assert same_multiset(constellation(hom_target()).points, [[1, 0, 0], [-1, 0, 0]], 1e-12)


def test_direct_factorization_oracle():
    # (a1 + 2 a2)(a1 - i a2): roots x = a1/a2 at -2 and i
    poly = {(2, 0): 1, (1, 1): 2 - 1j, (0, 2): -2j}
    s = PureState({(2, 0): poly[(2, 0)] * math.sqrt(2), (1, 1): poly[(1, 1)], (0, 2): poly[(0, 2)] * math.sqrt(2)})
    expected = []
    for a, b in [(1, 2), (1, -1j)]:
        # factor a a1 + b a2 is the star cos(t/2) a1 + e^{ip} sin(t/2) a2
        t = 2 * math.atan2(abs(b), abs(a))
        p = np.angle(b / a)
        expected.append([math.sin(t) * math.cos(p), math.sin(t) * math.sin(p), math.cos(t)])
    assert same_multiset(constellation(s).points, expected, 1e-12)


def test_constellation_errors():
    with pytest.raises(ArgumentError):
        constellation(PureState.zero(2, 2))
    with pytest.raises(ArgumentError):
        constellation(PureState.fock((1, 1, 0)))


def test_state_from_constellation_examples():
    assert state_from_constellation(Constellation([NORTH, NORTH])).allclose(PureState.fock((2, 0)), atol=1e-15)
    assert fidelity(state_from_constellation(Constellation([NORTH, SOUTH])), PureState.fock((1, 1))) == pytest.approx(1)
    t, p = 0.8, -2.1
    s = state_from_constellation(Constellation.from_angles([[t, p]]))
    assert s[(1, 0)] == pytest.approx(math.cos(t / 2))
    assert s[(0, 1)] == pytest.approx(np.exp(1j * p) * math.sin(t / 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip(rng, n):
    c = random_constellation(rng, n)
    back = constellation(state_from_constellation(c))
    assert same_multiset(back.points, c.points, 1e-8)


def test_equivariance(rng):
    s = random_state(rng, 2, 5)
    u = haar_random_unitary(2, 99)
    rotated = constellation(s).rotated(so3_of(u))
    assert same_multiset(constellation(apply_mode_unitary(u, s)).points, rotated.points, 1e-9)


def test_so3_and_lift(rng):
    r = random_rotation(rng)
    for w in su2_preimages(r):
        np.testing.assert_allclose(so3_of(w), r, atol=1e-12)
    half_turn = np.diag([1.0, -1.0, -1.0])
    for w in su2_preimages(half_turn):
        np.testing.assert_allclose(so3_of(w), half_turn, atol=1e-12)


def test_rotation_match_examples(rng):
    c = random_constellation(rng, 5)
    np.testing.assert_allclose(rotation_match(c, c) @ c.points.T, c.points.T, atol=1e-9)
    r = random_rotation(rng)
    found = rotation_match(c, c.rotated(r))
    assert same_multiset(c.rotated(found).points, c.rotated(r).points, 1e-7)
    assert rotation_match(Constellation([NORTH, NORTH]), Constellation([NORTH, SOUTH])) is None
    with pytest.raises(ArgumentError):
        rotation_match(Constellation([NORTH]), Constellation([NORTH, SOUTH]))


def test_degenerate_alignment(rng):
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    c1 = Constellation([NORTH, NORTH, SOUTH])
    c2 = Constellation([axis, -axis, -axis])
    r = rotation_match(c1, c2)
    assert r is not None and same_multiset(c1.rotated(r).points, c2.points, 1e-9)


def test_equivalent_examples():
    v = equivalent_d2(PureState.fock((1, 1)), hom_target())
    assert v is not None
    assert abs(inner_product(hom_target(), apply_mode_unitary(v, PureState.fock((1, 1))))) >= 1 - 1e-7
    assert equivalent_d2(PureState.fock((1, 1)), PureState.fock((2, 0))) is None
    with pytest.raises(ArgumentError):
        equivalent_d2(PureState.fock((1, 1)), PureState.fock((3, 0)))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**31))
def test_closure_under_unitaries(n, seed):
    s = random_state(np.random.default_rng(seed), 2, n)
    t = apply_mode_unitary(haar_random_unitary(2, seed), s)
    v = equivalent_d2(s, t, tol=1e-7)
    assert v is not None
    assert abs(inner_product(t, apply_mode_unitary(v, s))) >= 1 - 1e-8


@pytest.mark.parametrize("seed", range(5))
def test_conjugate_not_certified(seed):
    s = random_state(np.random.default_rng(seed), 2, 3)
    assert equivalent_d2(s, s.conj()) is None


def test_moved_star_rejected(rng):
    c = random_constellation(rng, 4)
    pts = c.points.copy()
    kick = np.cross(pts[0], rng.normal(size=3))
    pts[0] = pts[0] + 1e-2 * kick / np.linalg.norm(kick)
    moved = Constellation(pts / np.linalg.norm(pts, axis=1, keepdims=True))
    assert equivalent_d2(state_from_constellation(c), state_from_constellation(moved)) is None
