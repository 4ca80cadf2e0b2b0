"""Single-particle basis changes applied to many-particle states.

Convention: a unitary U rewrites the old creation operators in terms of the
new ones as a_i^dag = sum_j U_ij b_j^dag.  Applying U to a state returns its
amplitudes over the new-basis occupations.  Consequences used as anchors:

* the fully filled fermionic state (N = M) is multiplied by det U;
* a two-mode swap flips the sign of the doubly occupied fermionic pair;
* compose(u1, u2) applied once equals applying u1 then u2.

Two independent routes are provided.  ``apply_single_particle_unitary``
rebuilds amplitudes from determinants (fermions) or permanents (bosons) of
U submatrices.  ``apply_unitary_via_product_tensor`` contracts U onto every
index of the dense first-quantized tensor and converts back; it shares the
dense-tensor capacity bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import IncompatibleStates
from .fock import (
    FockState,
    Occupation,
    Statistics,
    enumerate_basis,
    indices_to_occupation,
    occupation_to_indices,
    prune_amplitudes,
)
from .first_quant import ProductTensor, from_product_tensor, to_product_tensor

UNITARITY_TOL = 1e-10


@dataclass(frozen=True)
class SingleParticleUnitary:
    """Square matrix validated to be unitary within 1e-10."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("a single-particle unitary must be a square matrix")
        object.__setattr__(self, "entries", arr)
        deviation = np.max(np.abs(arr.conj().T @ arr - np.eye(arr.shape[0])))
        if deviation > UNITARITY_TOL:
            raise ValueError(f"matrix deviates from unitarity by {deviation:.3e}")

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def adjoint(self) -> "SingleParticleUnitary":
        """The inverse transformation (conjugate transpose)."""
        return SingleParticleUnitary(self.entries.conj().T)


def _permanent(a: np.ndarray) -> complex:
    # Permutation expansion; fine at the few-particle sizes used here.
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    total = 0j
    rows = range(n)
    for perm in permutations(rows):
        term = 1.0 + 0j
        for i, j in zip(rows, perm):
            term *= a[i, j]
        total += term
    return total


def apply_single_particle_unitary(
    state: FockState, unitary: SingleParticleUnitary
) -> FockState:
    """Re-express a state in the new single-particle basis.

    Each fermionic configuration with occupied rows R contributes
    det(U[R, C]) to target configuration C; bosonic configurations use the
    permanent of the row/column multiset submatrix divided by
    sqrt(prod n! prod n'!).  Norm and particle number are preserved.
    """
    if unitary.dimension != state.modes:
        raise IncompatibleStates(
            f"unitary dimension {unitary.dimension} != mode count {state.modes}"
        )
    n = state.particles
    if n == 0 or state.is_zero:
        return state
    u = unitary.entries
    out: dict[Occupation, complex] = {}
    if state.statistics is Statistics.FERMIONIC:
        targets = list(combinations(range(state.modes), n))
        for occ, amp in state.amplitudes.items():
            rows = [i for i in range(state.modes) if occ[i]]
            for cols in targets:
                value = amp * np.linalg.det(u[np.ix_(rows, list(cols))])
                if value:
                    key = indices_to_occupation(cols, state.modes)
                    out[key] = out.get(key, 0j) + value
    else:
        targets = enumerate_basis(Statistics.BOSONIC, state.modes, n)
        target_data = [
            (occ, occupation_to_indices(occ), math.sqrt(math.prod(math.factorial(k) for k in occ)))
            for occ in targets
        ]
        for occ, amp in state.amplitudes.items():
            rows = list(occupation_to_indices(occ))
            row_factor = math.sqrt(math.prod(math.factorial(k) for k in occ))
            for target_occ, cols, col_factor in target_data:
                value = amp * _permanent(u[np.ix_(rows, list(cols))]) / (row_factor * col_factor)
                if value:
                    out[target_occ] = out.get(target_occ, 0j) + value
    return FockState(state.statistics, state.modes, n, prune_amplitudes(out))


def apply_unitary_via_product_tensor(
    state: FockState, unitary: SingleParticleUnitary
) -> FockState:
    """Same transformation through the dense first-quantized tensor.

    Contracts U onto every tensor index: q'(j_1..j_N) =
    sum_i q(i_1..i_N) U_{i_1 j_1} ... U_{i_N j_N}.  Kept as an independent
    cross-check of the determinant/permanent route.
    """
    if unitary.dimension != state.modes:
        raise IncompatibleStates(
            f"unitary dimension {unitary.dimension} != mode count {state.modes}"
        )
    tensor = to_product_tensor(state)
    arr = tensor.entries
    for _ in range(state.particles):
        arr = np.tensordot(arr, unitary.entries, axes=([0], [0]))
    return from_product_tensor(
        ProductTensor(state.statistics, state.modes, state.particles, arr)
    )


def dft_unitary(modes: int) -> SingleParticleUnitary:
    """Discrete-Fourier basis change, U_rk = exp(2 pi i r k / M) / sqrt(M)."""
    if modes < 1:
        raise ValueError("mode count must be positive")
    grid = np.outer(np.arange(modes), np.arange(modes))
    return SingleParticleUnitary(np.exp(2j * np.pi * grid / modes) / math.sqrt(modes))


def compose(
    first: SingleParticleUnitary, second: SingleParticleUnitary
) -> SingleParticleUnitary:
    """Single unitary equal to applying ``first`` then ``second``."""
    if first.dimension != second.dimension:
        raise IncompatibleStates("cannot compose unitaries of different dimension")
    return SingleParticleUnitary(first.entries @ second.entries)
