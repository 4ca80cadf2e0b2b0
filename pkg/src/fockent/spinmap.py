"""Half filling and the orbit/spin register picture.

Modes are grouped into orbits, each group listing the spin states of one
orbit in a fixed order (position 0 = up).  At half filling, exactly one
particle per orbit, an occupation vector factorizes into one unit vector
per orbit and the state relabels bijectively as a register of spin values.
Fermionic amplitudes are first brought to the mode order that lists each
orbit's modes contiguously, in orbit order, so the register inherits the
signed amplitudes and every orbit-bipartition entropy of the register
matches the corresponding mode entropy of the original state exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadPartition, NotHalfFilled, ZeroState
from .fock import (
    NORM_TOL,
    SIGNIFICANT_TOL,
    FockState,
    Occupation,
    Statistics,
    make_fock_state,
    reorder_modes,
)
from .measures import EntropyReport, von_neumann_entropy
from .rdm import DensityMatrix


@dataclass(frozen=True)
class OrbitGrouping:
    """Disjoint mode-index groups, one group of spin states per orbit."""

    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        groups = tuple(tuple(group) for group in self.groups)
        object.__setattr__(self, "groups", groups)
        seen: set[int] = set()
        for group in groups:
            if not group:
                raise BadPartition("orbit groups must be nonempty")
            for mode in group:
                if not isinstance(mode, int) or mode < 0:
                    raise BadPartition(f"bad mode index {mode!r}")
                if mode in seen:
                    raise BadPartition(f"mode {mode} appears in two orbit groups")
                seen.add(mode)

    @property
    def orbit_count(self) -> int:
        return len(self.groups)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self.groups)

    def mode_order(self) -> tuple[int, ...]:
        return tuple(mode for group in self.groups for mode in group)


@dataclass(frozen=True)
class SpinRegister:
    """Normalized amplitudes over per-orbit spin assignments."""

    statistics: Statistics
    grouping: OrbitGrouping
    amplitudes: dict[tuple[int, ...], complex]

    def __post_init__(self):
        sizes = self.grouping.sizes
        for spins in self.amplitudes:
            if len(spins) != len(sizes):
                raise ValueError(f"spin tuple {spins} does not match orbit count")
            if any(not 0 <= s < sizes[i] for i, s in enumerate(spins)):
                raise ValueError(f"spin tuple {spins} outside orbit ranges {sizes}")
        norm = math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"register norm {norm} deviates from 1")

    @property
    def orbit_labels(self) -> tuple[int, ...]:
        return tuple(range(self.grouping.orbit_count))


def _grouping_against_state(state: FockState, grouping: OrbitGrouping) -> None:
    for group in grouping.groups:
        for mode in group:
            if mode >= state.modes:
                raise BadPartition(f"mode {mode} outside 0..{state.modes - 1}")


def check_half_filling(state: FockState, grouping: OrbitGrouping) -> bool:
    """True iff every significant configuration has one particle per orbit."""
    _grouping_against_state(state, grouping)
    for occ, amp in state.amplitudes.items():
        if abs(amp) <= SIGNIFICANT_TOL:
            continue
        for group in grouping.groups:
            if sum(occ[mode] for mode in group) != 1:
                return False
    return True


def to_spin_register(state: FockState, grouping: OrbitGrouping) -> SpinRegister:
    """Relabel a half-filled state as a register of per-orbit spin values.

    The grouping must cover every mode.  Spin value = position of the
    occupied mode within its orbit group.
    """
    _grouping_against_state(state, grouping)
    order = grouping.mode_order()
    if len(order) != state.modes:
        raise BadPartition("orbit groups must cover every mode exactly once")
    if not check_half_filling(state, grouping):
        raise NotHalfFilled("some configuration does not hold one particle per orbit")
    if state.is_zero:
        raise ZeroState("cannot build a register from the zero state")
    sorted_state = reorder_modes(state, order)
    sizes = grouping.sizes
    amplitudes: dict[tuple[int, ...], complex] = {}
    for occ, amp in sorted_state.amplitudes.items():
        spins = []
        offset = 0
        for size in sizes:
            block = occ[offset : offset + size]
            spins.append(block.index(1))
            offset += size
        amplitudes[tuple(spins)] = amp
    return SpinRegister(state.statistics, grouping, amplitudes)


def from_spin_register(register: SpinRegister) -> FockState:
    """Inverse of ``to_spin_register`` on its domain."""
    grouping = register.grouping
    order = grouping.mode_order()
    modes = len(order)
    terms = []
    for spins, amp in register.amplitudes.items():
        occ = []
        for size, s in zip(grouping.sizes, spins):
            occ.extend(1 if k == s else 0 for k in range(size))
        terms.append((tuple(occ), amp))
    sorted_state = make_fock_state(register.statistics, modes, terms)
    inverse = [0] * modes
    for position, mode in enumerate(order):
        inverse[mode] = position
    return reorder_modes(sorted_state, tuple(inverse))


def register_entropy(register: SpinRegister, orbits: tuple[int, ...]) -> EntropyReport:
    """Entanglement entropy of the register across an orbit bipartition."""
    labels = tuple(sorted(set(orbits)))
    count = register.grouping.orbit_count
    if not labels or any(not 0 <= o < count for o in labels):
        raise BadPartition(f"orbit subset {orbits} outside 0..{count - 1}")
    if len(labels) == count:
        raise BadPartition("orbit subset must leave at least one orbit out")
    rest = tuple(o for o in range(count) if o not in labels)
    sizes = register.grouping.sizes
    kept_labels = tuple(itertools.product(*(range(sizes[o]) for o in labels)))
    index_of = {spins: i for i, spins in enumerate(kept_labels)}
    rho = np.zeros((len(kept_labels), len(kept_labels)), dtype=complex)
    by_rest: dict[tuple[int, ...], list[tuple[int, complex]]] = {}
    for spins, amp in register.amplitudes.items():
        kept = tuple(spins[o] for o in labels)
        other = tuple(spins[o] for o in rest)
        by_rest.setdefault(other, []).append((index_of[kept], amp))
    for entries in by_rest.values():
        for i, amp_i in entries:
            for j, amp_j in entries:
                rho[i, j] += amp_i * amp_j.conjugate()
    reduced = DensityMatrix(kept_labels, rho, trace_convention=1.0)
    return von_neumann_entropy(reduced, partition="orbits " + ",".join(map(str, labels)))


def build_double_dot_state(kind: str) -> FockState:
    """Named two-electron states of a double quantum dot.

    Four fermionic modes ordered (dot1 up, dot1 down, dot2 up, dot2 down).
    """
    root_half = 1 / math.sqrt(2)
    named: dict[str, list[tuple[Occupation, complex]]] = {
        "singlet": [((1, 0, 0, 1), root_half), ((0, 1, 1, 0), -root_half)],
        "triplet0": [((1, 0, 0, 1), root_half), ((0, 1, 1, 0), root_half)],
        "product_up_down": [((1, 0, 0, 1), 1.0)],
        "double_occ_dot1": [((1, 1, 0, 0), 1.0)],
    }
    if kind not in named:
        raise ValueError(f"unknown kind {kind!r}, expected one of {sorted(named)}")
    return make_fock_state(Statistics.FERMIONIC, 4, named[kind])


DOUBLE_DOT_GROUPING = OrbitGrouping(((0, 1), (2, 3)))
