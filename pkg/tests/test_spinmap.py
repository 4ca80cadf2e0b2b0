"""Half filling, the spin register mapping, and the double-dot states."""

import math

import numpy as np
import pytest

from fockent import (
    BadPartition,
    DOUBLE_DOT_GROUPING,
    NotHalfFilled,
    OrbitGrouping,
    Statistics,
    build_double_dot_state,
    check_half_filling,
    enumerate_basis,
    from_spin_register,
    make_fock_state,
    mode_entanglement_entropy,
    register_entropy,
    to_spin_register,
)

F = Statistics.FERMIONIC
ROOT_HALF = 1 / math.sqrt(2)

THREE_ORBITS = OrbitGrouping(((0, 1), (2, 3), (4, 5)))


def random_half_filled(rng):
    """Random fermionic state with one particle in each of 3 orbit pairs."""
    spins = [(a, b, c) for a in range(2) for b in range(2) for c in range(2)]
    raw = rng.normal(size=8) + 1j * rng.normal(size=8)
    raw /= np.linalg.norm(raw)
    terms = []
    for (a, b, c), amp in zip(spins, raw):
        occ = [0] * 6
        occ[a] = 1
        occ[2 + b] = 1
        occ[4 + c] = 1
        terms.append((tuple(occ), complex(amp)))
    return make_fock_state(F, 6, terms)


class TestOrbitGrouping:
    def test_rejects_overlapping_groups(self):
        with pytest.raises(BadPartition):
            OrbitGrouping(((0, 1), (1, 2)))

    def test_rejects_empty_group(self):
        with pytest.raises(BadPartition):
            OrbitGrouping(((0, 1), ()))

    def test_mode_order_concatenates_groups(self):
        grouping = OrbitGrouping(((2, 3), (0, 1)))
        assert grouping.mode_order() == (2, 3, 0, 1)


class TestHalfFilling:
    def test_singlet_is_half_filled(self):
        assert check_half_filling(build_double_dot_state("singlet"), DOUBLE_DOT_GROUPING)

    def test_double_occupancy_is_not(self):
        state = build_double_dot_state("double_occ_dot1")
        assert not check_half_filling(state, DOUBLE_DOT_GROUPING)

    def test_undersized_grouping_fails_by_counting(self):
        state = build_double_dot_state("singlet")
        assert not check_half_filling(state, OrbitGrouping(((0, 1, 2, 3),)))

    def test_half_filled_double_dot_subspace_has_dimension_four(self):
        basis = enumerate_basis(F, 4, 2)
        assert len(basis) == 6
        half_filled = [
            occ
            for occ in basis
            if occ[0] + occ[1] == 1 and occ[2] + occ[3] == 1
        ]
        assert len(half_filled) == 4


class TestToSpinRegister:
    def test_singlet_register_amplitudes(self):
        register = to_spin_register(build_double_dot_state("singlet"), DOUBLE_DOT_GROUPING)
        assert register.amplitudes[(0, 1)] == pytest.approx(ROOT_HALF)
        assert register.amplitudes[(1, 0)] == pytest.approx(-ROOT_HALF)
        assert set(register.amplitudes) == {(0, 1), (1, 0)}

    def test_product_state_register(self):
        register = to_spin_register(
            build_double_dot_state("product_up_down"), DOUBLE_DOT_GROUPING
        )
        assert register.amplitudes == {(0, 1): pytest.approx(1.0)}

    def test_half_filling_enforced(self):
        with pytest.raises(NotHalfFilled):
            to_spin_register(build_double_dot_state("double_occ_dot1"), DOUBLE_DOT_GROUPING)

    def test_grouping_must_cover_all_modes(self):
        with pytest.raises(BadPartition):
            to_spin_register(build_double_dot_state("singlet"), OrbitGrouping(((0, 1),)))

    def test_round_trip(self):
        rng = np.random.default_rng(61)
        for _ in range(10):
            state = random_half_filled(rng)
            register = to_spin_register(state, THREE_ORBITS)
            back = from_spin_register(register)
            for occ, amp in state.amplitudes.items():
                assert back.amplitude(occ) == pytest.approx(amp, abs=1e-12)

    def test_scrambled_orbit_order_still_round_trips(self):
        rng = np.random.default_rng(62)
        grouping = OrbitGrouping(((4, 5), (0, 1), (2, 3)))
        state = random_half_filled(rng)
        back = from_spin_register(to_spin_register(state, grouping))
        for occ, amp in state.amplitudes.items():
            assert back.amplitude(occ) == pytest.approx(amp, abs=1e-12)


class TestRegisterEntropy:
    def test_singlet_gives_one_bit_across_dots(self):
        register = to_spin_register(build_double_dot_state("singlet"), DOUBLE_DOT_GROUPING)
        assert register_entropy(register, (0,)).value_bits == pytest.approx(
            1.0, abs=1e-10
        )

    def test_triplet_gives_one_bit(self):
        register = to_spin_register(build_double_dot_state("triplet0"), DOUBLE_DOT_GROUPING)
        assert register_entropy(register, (0,)).value_bits == pytest.approx(
            1.0, abs=1e-10
        )

    def test_product_gives_zero(self):
        register = to_spin_register(
            build_double_dot_state("product_up_down"), DOUBLE_DOT_GROUPING
        )
        assert register_entropy(register, (0,)).value_bits == pytest.approx(
            0.0, abs=1e-12
        )

    def test_equals_mode_entropy_for_every_orbit_bipartition(self):
        rng = np.random.default_rng(63)
        for _ in range(10):
            state = random_half_filled(rng)
            register = to_spin_register(state, THREE_ORBITS)
            for subset in ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2)):
                modes = tuple(
                    mode for orbit in subset for mode in THREE_ORBITS.groups[orbit]
                )
                left = register_entropy(register, subset).value_bits
                right = mode_entanglement_entropy(state, modes).value_bits
                assert left == pytest.approx(right, abs=1e-9)

    def test_full_subset_rejected(self):
        register = to_spin_register(build_double_dot_state("singlet"), DOUBLE_DOT_GROUPING)
        with pytest.raises(BadPartition):
            register_entropy(register, (0, 1))


class TestDoubleDotStates:
    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            build_double_dot_state("quintet")

    def test_all_kinds_are_normalized_two_particle_states(self):
        for kind in ("singlet", "triplet0", "product_up_down", "double_occ_dot1"):
            state = build_double_dot_state(kind)
            assert state.particles == 2
            assert state.modes == 4
            assert state.norm == pytest.approx(1.0)

    def test_singlet_and_triplet_differ_by_relative_sign(self):
        singlet = build_double_dot_state("singlet")
        triplet = build_double_dot_state("triplet0")
        assert singlet.amplitude((1, 0, 0, 1)) == triplet.amplitude((1, 0, 0, 1))
        assert singlet.amplitude((0, 1, 1, 0)) == -triplet.amplitude((0, 1, 1, 0))
