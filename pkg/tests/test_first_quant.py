"""First-quantized tensors and the q/g/h coefficient systems."""

import math

import numpy as np
import pytest

from fockent import (
    CapacityExceeded,
    NotAntisymmetric,
    NotSymmetric,
    ProductTensor,
    Statistics,
    ZeroState,
    extract_coefficients,
    from_product_tensor,
    make_fock_state,
    random_fock_state,
    symmetrize,
    to_product_tensor,
)

from _support import product_tensor_oracle, symmetrized_g_oracle

F = Statistics.FERMIONIC
B = Statistics.BOSONIC

ROOT_HALF = 1 / math.sqrt(2)


class TestToProductTensor:
    def test_fermion_pair(self):
        state = make_fock_state(F, 2, [((1, 1), 1.0)])
        q = to_product_tensor(state).entries
        assert q[0, 1] == pytest.approx(ROOT_HALF)
        assert q[1, 0] == pytest.approx(-ROOT_HALF)

    def test_boson_double_occupation(self):
        state = make_fock_state(B, 2, [((2, 0), 1.0)])
        q = to_product_tensor(state).entries
        assert q[0, 0] == pytest.approx(1.0)
        assert abs(q).sum() == pytest.approx(1.0)

    def test_boson_pair(self):
        state = make_fock_state(B, 2, [((1, 1), 1.0)])
        q = to_product_tensor(state).entries
        assert q[0, 1] == pytest.approx(ROOT_HALF)
        assert q[1, 0] == pytest.approx(ROOT_HALF)

    def test_matches_permutation_sum_oracle(self):
        rng = np.random.default_rng(3)
        for statistics, fermionic in ((F, True), (B, False)):
            for modes, particles in ((3, 2), (4, 3)):
                state = random_fock_state(statistics, modes, particles, rng)
                q = to_product_tensor(state).entries
                ref = product_tensor_oracle(
                    state.amplitudes, fermionic, modes, particles
                )
                assert np.max(np.abs(q - ref)) < 1e-12

    def test_norm_preserved(self):
        rng = np.random.default_rng(4)
        state = random_fock_state(B, 4, 3, rng)
        q = to_product_tensor(state).entries
        assert np.sum(np.abs(q) ** 2) == pytest.approx(1.0, abs=1e-10)


class TestRoundTrip:
    def test_random_states_round_trip(self):
        rng = np.random.default_rng(9)
        for statistics in (F, B):
            for modes, particles in ((3, 2), (5, 3), (4, 2)):
                if statistics is F and particles > modes:
                    continue
                state = random_fock_state(statistics, modes, particles, rng)
                back = from_product_tensor(to_product_tensor(state))
                for occ, amp in state.amplitudes.items():
                    assert back.amplitude(occ) == pytest.approx(amp, abs=1e-12)

    def test_zero_tensor_rejected(self):
        tensor = ProductTensor(F, 2, 2, np.zeros((2, 2), dtype=complex))
        with pytest.raises(ZeroState):
            from_product_tensor(tensor)


class TestSymmetrize:
    def test_fermionic_two_term_antisymmetrizer(self):
        raw = np.zeros((2, 2), dtype=complex)
        raw[0, 1] = 1.0
        q = symmetrize(raw, F).entries
        assert q[0, 1] == pytest.approx(0.5)
        assert q[1, 0] == pytest.approx(-0.5)

    def test_bosonic_symmetric_input_unchanged(self):
        raw = np.zeros((2, 2), dtype=complex)
        raw[0, 0] = 1.0
        q = symmetrize(raw, B).entries
        assert np.max(np.abs(q - raw)) == 0.0

    def test_fermionic_diagonal_input_vanishes(self):
        raw = np.zeros((2, 2), dtype=complex)
        raw[0, 0] = 1.0
        q = symmetrize(raw, F).entries
        assert np.max(np.abs(q)) == 0.0

    def test_idempotent(self):
        rng = np.random.default_rng(12)
        raw = rng.normal(size=(3, 3, 3)) + 1j * rng.normal(size=(3, 3, 3))
        for statistics in (F, B):
            once = symmetrize(raw, statistics).entries
            twice = symmetrize(once, statistics).entries
            assert np.max(np.abs(once - twice)) < 1e-12


class TestSymmetryValidation:
    def test_non_antisymmetric_tensor_rejected(self):
        bad = np.zeros((2, 2), dtype=complex)
        bad[0, 1] = 1.0
        with pytest.raises(NotAntisymmetric):
            ProductTensor(F, 2, 2, bad)

    def test_non_symmetric_bosonic_tensor_rejected(self):
        bad = np.zeros((2, 2), dtype=complex)
        bad[0, 1] = 1.0
        bad[1, 0] = -1.0
        with pytest.raises(NotSymmetric):
            ProductTensor(B, 2, 2, bad)

    def test_antisymmetric_error_is_a_symmetry_error(self):
        assert issubclass(NotAntisymmetric, NotSymmetric)

    def test_capacity_bound(self):
        # 101^3 entries just tips over the 10^6 dense-tensor budget.
        with pytest.raises(CapacityExceeded):
            ProductTensor(B, 101, 3, np.zeros((101,) * 3, dtype=complex))


class TestCoefficientFlavors:
    def test_fermionic_h_equals_one(self):
        state = make_fock_state(F, 2, [((1, 1), 1.0)])
        h = extract_coefficients(state, "h_normalized")
        assert h.entries[(0, 1)] == pytest.approx(1.0)

    def test_fermionic_g_pair(self):
        state = make_fock_state(F, 2, [((1, 1), 1.0)])
        g = extract_coefficients(state, "g_unnormalized")
        assert g.entries[(0, 1)] == pytest.approx(ROOT_HALF)

    def test_bosonic_g_double_occupation(self):
        # |2,0> = (1/2) * sum_P |0>|0>: the unnormalized symmetrized ket
        # counts the permutation twice, so g = 1/2 (frozen from the
        # permutation-sum oracle).
        state = make_fock_state(B, 2, [((2, 0), 1.0)])
        g = extract_coefficients(state, "g_unnormalized")
        assert g.entries[(0, 0)] == pytest.approx(0.5)

    def test_matches_expansion_oracle(self):
        rng = np.random.default_rng(21)
        for statistics, fermionic in ((F, True), (B, False)):
            state = random_fock_state(statistics, 4, 3, rng)
            g = extract_coefficients(state, "g_unnormalized").entries
            ref = symmetrized_g_oracle(state.amplitudes, fermionic, 4, 3)
            for key in set(g) | set(ref):
                assert g.get(key, 0.0) == pytest.approx(ref.get(key, 0.0), abs=1e-12)

    def test_h_equals_state_amplitudes(self):
        rng = np.random.default_rng(22)
        state = random_fock_state(B, 4, 2, rng)
        h = extract_coefficients(state, "h_normalized").entries
        total = sum(abs(v) ** 2 for v in h.values())
        assert total == pytest.approx(1.0, abs=1e-10)
