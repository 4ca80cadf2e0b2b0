"""Occupation-number states with a fixed particle number.

Conventions
-----------
* A basis state |n_1, ..., n_M> is built by the creation-operator product
  (a_1^dag)^{n_1} (a_2^dag)^{n_2} ... (a_M^dag)^{n_M} |0>, read as an
  ordinary operator product (the factor nearest the vacuum acts first).
  Each bosonic power is divided by sqrt(n!) so basis states are unit norm.
* All fermionic signs follow from that single ordering: acting with a_i or
  a_i^dag picks up (-1)^(number of occupied modes with index below i).
* An operator string lists its factors in application order: the first
  entry of the list acts on the state first.
* States are sparse dictionaries keyed by occupation tuples.  Amplitudes
  whose magnitude falls below ``PRUNE_TOL`` after arithmetic are dropped,
  which keeps structurally exact zeros exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    IncompatibleStates,
    MixedParticleNumber,
    PauliViolation,
    ZeroState,
)

PRUNE_TOL = 1e-14
NORM_TOL = 1e-9
SIGNIFICANT_TOL = 1e-10

Occupation = tuple[int, ...]

CREATE = "create"
ANNIHILATE = "annihilate"

OperatorFactor = tuple[str, int]


class Statistics(Enum):
    FERMIONIC = "fermionic"
    BOSONIC = "bosonic"

    @property
    def exchange_sign(self) -> int:
        return -1 if self is Statistics.FERMIONIC else 1


def create(mode: int) -> OperatorFactor:
    """Creation factor a_mode^dag for use in an operator string."""
    return (CREATE, mode)


def annihilate(mode: int) -> OperatorFactor:
    """Annihilation factor a_mode for use in an operator string."""
    return (ANNIHILATE, mode)


def _validate_occupation(statistics: Statistics, modes: int, occ: Occupation) -> None:
    if len(occ) != modes:
        raise ValueError(f"occupation {occ} does not have {modes} entries")
    for n in occ:
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"occupation {occ} has a negative or non-integer entry")
    if statistics is Statistics.FERMIONIC and any(n > 1 for n in occ):
        raise PauliViolation(f"fermionic occupation {occ} exceeds one in some mode")


@dataclass(frozen=True)
class FockState:
    """Sparse fixed-N state: complex amplitudes keyed by occupation tuples.

    Instances are treated as immutable; every operation returns a new state.
    The zero state (empty amplitude dictionary) is a valid value so operator
    strings can annihilate a state completely without raising.
    """

    statistics: Statistics
    modes: int
    particles: int
    amplitudes: dict[Occupation, complex]

    def __post_init__(self):
        if self.modes < 1:
            raise ValueError("a state needs at least one mode")
        if self.particles < 0:
            raise ValueError("particle number must be nonnegative")
        for occ in self.amplitudes:
            _validate_occupation(self.statistics, self.modes, occ)
            if sum(occ) != self.particles:
                raise MixedParticleNumber(
                    f"occupation {occ} holds {sum(occ)} particles, expected {self.particles}"
                )

    @property
    def is_zero(self) -> bool:
        return not self.amplitudes

    @property
    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def amplitude(self, occ: Iterable[int]) -> complex:
        return self.amplitudes.get(tuple(occ), 0j)


def prune_amplitudes(amps: dict[Occupation, complex]) -> dict[Occupation, complex]:
    return {occ: a for occ, a in amps.items() if abs(a) > PRUNE_TOL}


def make_fock_state(
    statistics: Statistics,
    modes: int,
    terms: Sequence[tuple[Iterable[int], complex]],
    normalize: bool = False,
) -> FockState:
    """Build a state from (occupation, amplitude) terms.

    Duplicate occupations are summed.  All terms must share one particle
    total; fermionic occupations must stay at or below one per mode.  With
    ``normalize`` set the result is rescaled to unit norm, and a vanishing
    norm raises ZeroState.
    """
    if not terms:
        raise ValueError("at least one term is required")
    particles: int | None = None
    merged: dict[Occupation, complex] = {}
    for index, (occ_in, amp) in enumerate(terms):
        occ = tuple(int(n) for n in occ_in)
        try:
            _validate_occupation(statistics, modes, occ)
        except PauliViolation as err:
            raise PauliViolation(str(err), term_index=index) from None
        total = sum(occ)
        if particles is None:
            particles = total
        elif total != particles:
            raise MixedParticleNumber(
                f"term {index} holds {total} particles, expected {particles}",
                term_index=index,
            )
        merged[occ] = merged.get(occ, 0j) + complex(amp)
    merged = prune_amplitudes(merged)
    assert particles is not None
    if normalize:
        norm = math.sqrt(sum(abs(a) ** 2 for a in merged.values()))
        if norm < PRUNE_TOL:
            raise ZeroState("cannot normalize a state with vanishing norm")
        merged = {occ: a / norm for occ, a in merged.items()}
    return FockState(statistics, modes, particles, merged)


def _apply_factor(
    state_amps: dict[Occupation, complex],
    statistics: Statistics,
    action: str,
    mode: int,
) -> dict[Occupation, complex]:
    out: dict[Occupation, complex] = {}
    fermionic = statistics is Statistics.FERMIONIC
    for occ, amp in state_amps.items():
        n = occ[mode]
        if action == CREATE:
            if fermionic:
                if n == 1:
                    continue
                sign = -1 if sum(occ[:mode]) % 2 else 1
                value = amp * sign
            else:
                value = amp * math.sqrt(n + 1)
            new_occ = occ[:mode] + (n + 1,) + occ[mode + 1 :]
        else:
            if n == 0:
                continue
            if fermionic:
                sign = -1 if sum(occ[:mode]) % 2 else 1
                value = amp * sign
            else:
                value = amp * math.sqrt(n)
            new_occ = occ[:mode] + (n - 1,) + occ[mode + 1 :]
        out[new_occ] = out.get(new_occ, 0j) + value
    return prune_amplitudes(out)


def apply_operator_string(state: FockState, ops: Sequence[OperatorFactor]) -> FockState:
    """Apply a string of creation/annihilation factors, first entry first.

    Pauli blocking and annihilation of an empty mode drop the affected term
    (they do not raise), so the result may be the zero state.  The result is
    generally unnormalized.
    """
    delta = 0
    amps = dict(state.amplitudes)
    for action, mode in ops:
        if action not in (CREATE, ANNIHILATE):
            raise ValueError(f"unknown operator action {action!r}")
        if not 0 <= mode < state.modes:
            raise ValueError(f"mode {mode} outside 0..{state.modes - 1}")
        amps = _apply_factor(amps, state.statistics, action, mode)
        delta += 1 if action == CREATE else -1
    particles = state.particles + delta
    if not amps:
        particles = max(particles, 0)
    return FockState(state.statistics, state.modes, particles, amps)


def inner_product(left: FockState, right: FockState) -> complex:
    """<left|right>, conjugate linear in the first argument."""
    if (
        left.statistics is not right.statistics
        or left.modes != right.modes
        or left.particles != right.particles
    ):
        raise IncompatibleStates(
            "inner product needs matching statistics, mode count, and particle number"
        )
    small, large = left.amplitudes, right.amplitudes
    if len(large) < len(small):
        return sum(large[occ].conjugate() * small[occ] for occ in large if occ in small).conjugate()
    return sum(small[occ].conjugate() * large[occ] for occ in small if occ in large)


def enumerate_basis(statistics: Statistics, modes: int, particles: int) -> list[Occupation]:
    """All occupation vectors of the fixed-N space, in descending
    lexicographic order.  A fermionic request with N > M yields an empty
    list (the space is empty, not an error)."""
    if particles < 0:
        raise ValueError("particle number must be nonnegative")
    cap = 1 if statistics is Statistics.FERMIONIC else particles

    def rec(remaining_modes: int, remaining: int):
        if remaining_modes == 0:
            if remaining == 0:
                yield ()
            return
        for k in range(min(cap, remaining), -1, -1):
            for rest in rec(remaining_modes - 1, remaining - k):
                yield (k,) + rest

    return list(rec(modes, particles))


def basis_dimension(statistics: Statistics, modes: int, particles: int) -> int:
    if statistics is Statistics.FERMIONIC:
        return math.comb(modes, particles) if particles <= modes else 0
    return math.comb(modes + particles - 1, particles)


def occupation_to_indices(occ: Occupation) -> tuple[int, ...]:
    """Ascending mode indices with multiplicity, e.g. (1, 0, 2) -> (0, 2, 2)."""
    out: list[int] = []
    for mode, n in enumerate(occ):
        out.extend([mode] * n)
    return tuple(out)


def indices_to_occupation(indices: Iterable[int], modes: int) -> Occupation:
    occ = [0] * modes
    for k in indices:
        occ[k] += 1
    return tuple(occ)


def inversion_parity(seq: Sequence[int]) -> int:
    """+1 or -1 for the parity of the number of inversions in ``seq``."""
    inversions = 0
    for i, a in enumerate(seq):
        for b in seq[i + 1 :]:
            if a > b:
                inversions += 1
    return -1 if inversions % 2 else 1


def reorder_modes(state: FockState, order: Sequence[int]) -> FockState:
    """Relabel modes so new mode p is old mode ``order[p]``.

    Fermionic amplitudes pick up the parity of the permutation induced on
    the occupied-mode creation order; bosonic amplitudes are unchanged.
    """
    if sorted(order) != list(range(state.modes)):
        raise ValueError("order must be a permutation of all mode indices")
    position = {old: new for new, old in enumerate(order)}
    fermionic = state.statistics is Statistics.FERMIONIC
    out: dict[Occupation, complex] = {}
    for occ, amp in state.amplitudes.items():
        new_occ = tuple(occ[j] for j in order)
        if fermionic:
            seq = [position[i] for i in range(state.modes) if occ[i]]
            amp = amp * inversion_parity(seq)
        out[new_occ] = amp
    return FockState(state.statistics, state.modes, state.particles, out)


def random_fock_state(
    statistics: Statistics,
    modes: int,
    particles: int,
    rng: np.random.Generator,
) -> FockState:
    """Haar-like random unit vector over the fixed-N occupation basis."""
    basis = enumerate_basis(statistics, modes, particles)
    if not basis:
        raise ZeroState(f"no basis states for M={modes}, N={particles}")
    raw = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
    raw /= np.linalg.norm(raw)
    return FockState(
        statistics,
        modes,
        particles,
        prune_amplitudes({occ: complex(a) for occ, a in zip(basis, raw)}),
    )


def fermion_configurations(modes: int, particles: int) -> list[tuple[int, ...]]:
    """Strictly increasing index tuples labelling fermionic configurations."""
    return list(combinations(range(modes), particles))
