import cmath
import math

import numpy as np
import pytest
from conftest import random_state
from hypothesis import given, settings, strategies as st

import oracles
from photon_invariants.catalog import hom_target, singlet_l, singlet_lr, singlet_r
from photon_invariants.errors import ArgumentError, DimensionError
from photon_invariants.fock import PureState, fidelity, to_particle_vector
from photon_invariants.modes import (ModeUnitary, apply_annihilation_monomial, apply_creation_monomial,
                                     apply_mode_unitary, haar_random_unitary, identity_unitary,
                                     mode_tensor_product, permutation_unitary, swap_permutation)


def test_mode_unitary_checks():
    with pytest.raises(ArgumentError):
        ModeUnitary([[1, 1], [0, 1]])
    with pytest.raises(DimensionError):
        ModeUnitary([[1, 0, 0], [0, 1, 0]])
    u = identity_unitary(3)
    with pytest.raises(ValueError):
        u.matrix[0, 0] = 2


@pytest.mark.parametrize("state, m, expected", [
    (PureState.vacuum(2), (1, 0), {(1, 0): 1}),
    (PureState.fock((1, 0)), (1, 0), {(2, 0): math.sqrt(2)}),
    (PureState.fock((1, 1)), (1, 1), {(2, 2): 2}),
])
def test_creation_monomial_examples(state, m, expected):
    out = apply_creation_monomial(state, m)
    assert dict(out.amps) == pytest.approx(expected)


def test_creation_monomial_matches_dense_oracle(rng):
    s = random_state(rng, 2, 2)
    m = (2, 1)
    cutoff = 5
    ops = [a.conj().T for a in oracles.annihilators(2, cutoff)]
    v = sum(amp * oracles.fock_vector(k, cutoff) for k, amp in s.amps.items())
    v = np.linalg.matrix_power(ops[0], 2) @ ops[1] @ v / math.sqrt(2)
    out = apply_creation_monomial(s, m)
    for key in oracles.compositions(5, 2):
        assert out[key] == pytest.approx(v @ oracles.fock_vector(key, cutoff), abs=1e-12)


def test_annihilation_monomial():
    out = apply_annihilation_monomial(PureState.fock((2, 1)), (1, 1), normalized=False)
    assert dict(out.amps) == pytest.approx({(1, 0): math.sqrt(2)})
    assert apply_annihilation_monomial(PureState.fock((0, 2)), (1, 0)).is_zero()
    with pytest.raises(DimensionError):
        apply_annihilation_monomial(PureState.fock((1, 0)), (1, 1))


def test_identity_is_exact(rng):
    s = random_state(rng, 3, 3)
    out = apply_mode_unitary(identity_unitary(3), s)
    assert np.max(np.abs(out.to_vector() - s.to_vector())) <= 1e-12


def test_beam_splitter_makes_hom_state():
    u = ModeUnitary(np.array([[1, 1], [-1, 1]]) / math.sqrt(2))
    out = apply_mode_unitary(u, PureState.fock((1, 1)))
    assert fidelity(out, hom_target()) == pytest.approx(1, abs=1e-12)


def test_phase_on_single_monomial():
    theta = 0.37
    u = ModeUnitary(np.diag([cmath.exp(1j * theta), 1]))
    out = apply_mode_unitary(u, PureState.fock((2, 0)))
    assert out[(2, 0)] == pytest.approx(cmath.exp(2j * theta), abs=1e-14)


@pytest.mark.parametrize("d, n", [(2, 1), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4)])
def test_particle_picture_consistency(rng, d, n):
    s = random_state(rng, d, n)
    u = haar_random_unitary(d, seed=d * 10 + n)
    big = np.eye(1)
    for _ in range(n):
        big = np.kron(big, u.matrix)
    lhs = to_particle_vector(apply_mode_unitary(u, s)).data
    rhs = big @ oracles.particle_vector(dict(s.amps), d, n)
    assert np.max(np.abs(lhs - rhs)) <= 1e-9


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 2**31))
def test_norm_preserved_and_homomorphism(d, n, seed):
    rng = np.random.default_rng(seed)
    s = random_state(rng, d, n, normalize=False)
    u, v = haar_random_unitary(d, seed), haar_random_unitary(d, seed + 1)
    us = apply_mode_unitary(u, s)
    assert us.norm() == pytest.approx(s.norm(), abs=1e-10 * max(1, s.norm()))
    lhs = apply_mode_unitary(u, apply_mode_unitary(v, s))
    rhs = apply_mode_unitary(u @ v, s)
    assert np.max(np.abs(lhs.to_vector() - rhs.to_vector())) <= 1e-9 * max(1, s.norm())


def test_haar_examples():
    u = haar_random_unitary(1, 5).matrix
    assert abs(abs(u[0, 0]) - 1) <= 1e-14
    u = haar_random_unitary(3, 7).matrix
    assert np.max(np.abs(u.conj().T @ u - np.eye(3))) <= 1e-10
    np.testing.assert_array_equal(haar_random_unitary(4, 11).matrix, haar_random_unitary(4, 11).matrix)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_haar_first_entry_mean(d):
    samples = np.array([abs(haar_random_unitary(d, seed).matrix[0, 0]) ** 2 for seed in range(10_000)])
    se = samples.std(ddof=1) / math.sqrt(samples.size)
    assert abs(samples.mean() - 1 / d) <= 5 * se


def test_permutation_unitary():
    np.testing.assert_array_equal(permutation_unitary([1, 2, 3], block=2).matrix, np.eye(6))
    u = permutation_unitary([2, 3, 1])
    # group 1 goes to group 2
    assert u.matrix[1, 0] == 1
    out = apply_mode_unitary(u, PureState.fock((1, 0, 0)))
    assert out.allclose(PureState.fock((0, 1, 0)))
    with pytest.raises(ArgumentError):
        permutation_unitary([1, 1, 2])
    assert swap_permutation(1, 3, 4) == [3, 2, 1, 4]


def test_swap_beams_maps_l_to_minus_r():
    u = permutation_unitary(swap_permutation(1, 2, 4), block=2)
    l2 = apply_mode_unitary(u, singlet_l())
    r2 = apply_mode_unitary(u, singlet_r())
    assert np.max(np.abs(l2.to_vector() + singlet_r().to_vector())) <= 1e-12
    assert np.max(np.abs(r2.to_vector() + singlet_l().to_vector())) <= 1e-12


def test_three_cycle_shifts_phi():
    theta, phi = 1.1, 0.4
    u = permutation_unitary([2, 3, 1, 4], block=2)
    out = apply_mode_unitary(u, singlet_lr(theta, phi))
    assert fidelity(out, singlet_lr(theta, phi + 2 * math.pi / 3)) >= 1 - 1e-10


def test_mode_tensor_product_examples():
    out = mode_tensor_product([PureState.fock((1, 1)), PureState.fock((1, 1))])
    assert out.allclose(PureState.fock((1, 1, 1, 1)))
    s = PureState({(0, 3): 1 / math.sqrt(2), (2, 1): 1 / math.sqrt(2)})
    out = mode_tensor_product([s, s])
    expected = {(0, 3, 0, 3): 0.5, (0, 3, 2, 1): 0.5, (2, 1, 0, 3): 0.5, (2, 1, 2, 1): 0.5}
    assert dict(out.amps) == pytest.approx(expected)
    t = PureState({(1, 0): 0.6, (0, 1): 0.8})
    out = mode_tensor_product([PureState.vacuum(2), t])
    assert dict(out.amps) == pytest.approx({(0, 0, 1, 0): 0.6, (0, 0, 0, 1): 0.8})
