"""Canonical pair forms of two-particle states."""

import math

import numpy as np
import pytest

from fockent import (
    NotAntisymmetric,
    NotSymmetric,
    NotTwoParticle,
    CoefficientMatrix,
    Statistics,
    apply_single_particle_unitary,
    canonical_matrix,
    coefficient_matrix,
    from_coefficient_matrix,
    is_single_configuration,
    make_fock_state,
    random_fock_state,
    rho1_in_yang_basis,
    von_neumann_entropy,
    n_particle_rdm,
    yang_decompose,
)

from _support import haar_unitary

F = Statistics.FERMIONIC
B = Statistics.BOSONIC

ROOT_HALF = 1 / math.sqrt(2)


def random_pair_matrix(statistics, dim, rng):
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    w = raw - raw.T if statistics is F else raw + raw.T
    return CoefficientMatrix(statistics, w / np.linalg.norm(w))


class TestCoefficientMatrix:
    def test_fermion_pair_entries(self):
        state = make_fock_state(F, 4, [((1, 1, 0, 0), 1.0)])
        w = coefficient_matrix(state).entries
        assert w[0, 1] == pytest.approx(0.5)
        assert w[1, 0] == pytest.approx(-0.5)
        assert np.count_nonzero(w) == 2

    def test_boson_double_occupation_entry(self):
        state = make_fock_state(B, 2, [((2, 0), 1.0)])
        w = coefficient_matrix(state).entries
        assert w[0, 0] == pytest.approx(ROOT_HALF)

    def test_boson_pair_entries(self):
        state = make_fock_state(B, 2, [((1, 1), 1.0)])
        w = coefficient_matrix(state).entries
        assert w[0, 1] == pytest.approx(0.5)
        assert w[1, 0] == pytest.approx(0.5)

    def test_round_trip(self):
        rng = np.random.default_rng(51)
        for statistics, modes in ((F, 5), (B, 4)):
            state = random_fock_state(statistics, modes, 2, rng)
            back = from_coefficient_matrix(coefficient_matrix(state))
            for occ, amp in state.amplitudes.items():
                assert back.amplitude(occ) == pytest.approx(amp, abs=1e-12)

    def test_wrong_particle_number_rejected(self):
        state = make_fock_state(F, 3, [((1, 1, 1), 1.0)])
        with pytest.raises(NotTwoParticle):
            coefficient_matrix(state)

    def test_symmetry_class_enforced(self):
        with pytest.raises(NotAntisymmetric):
            CoefficientMatrix(F, np.array([[0.0, 1.0], [1.0, 0.0]]))
        with pytest.raises(NotSymmetric):
            CoefficientMatrix(B, np.array([[0.0, 1.0], [-1.0, 0.0]]))


class TestYangDecompose:
    def test_single_determinant_rank_one(self):
        state = make_fock_state(F, 4, [((1, 1, 0, 0), 1.0)])
        form = yang_decompose(coefficient_matrix(state))
        assert form.values == pytest.approx((0.5,), abs=1e-12)
        assert form.rank == 1

    def test_two_block_state_equal_values(self):
        state = make_fock_state(
            F, 4, [((1, 1, 0, 0), ROOT_HALF), ((0, 0, 1, 1), ROOT_HALF)]
        )
        form = yang_decompose(coefficient_matrix(state))
        expected = 1 / (2 * math.sqrt(2))
        assert form.values == pytest.approx((expected, expected), abs=1e-12)
        assert form.rank == 2

    def test_boson_condensate_single_value(self):
        state = make_fock_state(B, 3, [((2, 0, 0), 1.0)])
        form = yang_decompose(coefficient_matrix(state))
        assert form.values == pytest.approx((ROOT_HALF,), abs=1e-12)
        assert form.rank == 1

    @pytest.mark.parametrize("statistics", [F, B])
    @pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
    def test_reconstruction_on_random_matrices(self, statistics, dim):
        rng = np.random.default_rng(1000 + dim)
        for _ in range(40):
            matrix = random_pair_matrix(statistics, dim, rng)
            form = yang_decompose(matrix)
            u = form.basis_change.entries
            residual = u.T @ matrix.entries @ u - canonical_matrix(form)
            assert np.max(np.abs(residual)) < 1e-9
            assert sorted(form.values, reverse=True) == list(form.values)

    def test_fermionic_matrix_rank_is_twice_value_count(self):
        rng = np.random.default_rng(52)
        for _ in range(20):
            matrix = random_pair_matrix(F, 6, rng)
            form = yang_decompose(matrix)
            assert np.linalg.matrix_rank(matrix.entries, tol=1e-8) == 2 * form.rank

    def test_block_weights_square_sum_to_state_norm(self):
        rng = np.random.default_rng(53)
        for statistics, scale in ((F, 2.0), (B, math.sqrt(2))):
            state = random_fock_state(statistics, 5, 2, rng)
            form = yang_decompose(coefficient_matrix(state))
            weights_sq = sum((scale * c) ** 2 for c in form.values)
            assert weights_sq == pytest.approx(1.0, abs=1e-10)

    def test_rank_one_iff_single_configuration_after_rotation(self):
        rng = np.random.default_rng(54)
        for _ in range(10):
            state = random_fock_state(F, 4, 2, rng)
            form = yang_decompose(coefficient_matrix(state))
            rotated = apply_single_particle_unitary(state, form.basis_change)
            assert (form.rank == 1) == is_single_configuration(rotated)
        determinant = make_fock_state(F, 4, [((0, 1, 0, 1), 1.0)])
        form = yang_decompose(coefficient_matrix(determinant))
        rotated = apply_single_particle_unitary(determinant, form.basis_change)
        assert form.rank == 1 and is_single_configuration(rotated)

    def test_deterministic_under_repetition(self):
        rng = np.random.default_rng(55)
        matrix = random_pair_matrix(B, 5, rng)
        first = yang_decompose(matrix)
        second = yang_decompose(matrix)
        assert np.array_equal(first.basis_change.entries, second.basis_change.entries)
        assert first.values == second.values


class TestRho1InYangBasis:
    @pytest.mark.parametrize(
        "statistics,modes", [(F, 6), (B, 5)], ids=["fermions", "bosons"]
    )
    def test_rotated_rho1_is_diagonal(self, statistics, modes):
        rng = np.random.default_rng(56)
        for _ in range(25):
            state = random_fock_state(statistics, modes, 2, rng)
            dm = rho1_in_yang_basis(state)
            off = dm.entries - np.diag(np.diag(dm.entries))
            assert np.max(np.abs(off)) < 1e-8

    def test_fermionic_spectrum_pairs_equal_block_weights(self):
        rng = np.random.default_rng(57)
        state = random_fock_state(F, 6, 2, rng)
        form = yang_decompose(coefficient_matrix(state))
        dm = rho1_in_yang_basis(state)
        diag = np.real(np.diag(dm.entries)) / 2.0
        for r, c in enumerate(form.values):
            weight_sq = (2 * c) ** 2 / 2.0
            assert diag[2 * r] == pytest.approx(weight_sq, abs=1e-9)
            assert diag[2 * r + 1] == pytest.approx(weight_sq, abs=1e-9)

    def test_entropy_agrees_with_unrotated_spectrum(self):
        rng = np.random.default_rng(58)
        for statistics, modes in ((F, 5), (B, 4)):
            state = random_fock_state(statistics, modes, 2, rng)
            plain = von_neumann_entropy(n_particle_rdm(state, 1)).value_bits
            rotated = von_neumann_entropy(rho1_in_yang_basis(state)).value_bits
            assert rotated == pytest.approx(plain, abs=1e-9)
