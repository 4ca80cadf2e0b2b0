"""Canonical pair forms of two-particle states.

A two-particle state is encoded by its coefficient matrix w, defined by
|psi> = sum_ij w_ij a_i^dag a_j^dag |0>, antisymmetric for fermions and
symmetric for bosons.  A single-particle unitary U (same convention as the
transform module: a_i^dag = sum_j U_ij b_j^dag) acts on w by congruence,
w -> U^T w U.  yang_decompose finds the U that brings w to its canonical
congruence form:

* fermions: direct sum of blocks [[0, c_r], [-c_r, 0]] plus zeros, so the
  state is a sum of pair configurations with weights 2 c_r;
* bosons: diag(d_r) (Takagi form, w = conj(U) diag(d) U^dag), a sum of
  doubly occupied configurations with weights sqrt(2) d_r.

Values are real, nonnegative, and sorted in descending order; equal values
are ordered by the smallest original mode index carrying a significant
basis-column component.  Construction goes through the eigenstructure of
w^dag w.  On each eigenspace the antiunitary map x -> conj(w x)/c squares
to -1 (fermions, giving Kramers pairs) or +1 (bosons, giving a real
structure whose fixed vectors are Takagi columns).

In the rotated basis the one-particle RDM is diagonal, which is what
rho1_in_yang_basis exposes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAntisymmetric, NotSymmetric, NotTwoParticle, ZeroState
from .fock import FockState, Occupation, Statistics, prune_amplitudes
from .rdm import DensityMatrix, n_particle_rdm
from .transform import SingleParticleUnitary, apply_single_particle_unitary

MATRIX_SYMMETRY_TOL = 1e-10
VALUE_TOL = 1e-10
COMPONENT_TOL = 1e-8


@dataclass(frozen=True)
class CoefficientMatrix:
    """Pair-coefficient matrix w with the symmetry of its statistics."""

    statistics: Statistics
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("coefficient matrix must be square")
        object.__setattr__(self, "entries", arr)
        if self.statistics is Statistics.FERMIONIC:
            deviation = np.max(np.abs(arr + arr.T))
            if deviation > MATRIX_SYMMETRY_TOL:
                raise NotAntisymmetric(
                    f"matrix deviates from antisymmetry by {deviation:.3e}"
                )
        else:
            deviation = np.max(np.abs(arr - arr.T))
            if deviation > MATRIX_SYMMETRY_TOL:
                raise NotSymmetric(f"matrix deviates from symmetry by {deviation:.3e}")

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class YangForm:
    """Canonical values with the basis change that produces them."""

    statistics: Statistics
    values: tuple[float, ...]
    basis_change: SingleParticleUnitary
    rank: int


def coefficient_matrix(state: FockState) -> CoefficientMatrix:
    """Pair-coefficient matrix of a two-particle state.

    Off-diagonal pairs give w_ij = f(e_i + e_j) / 2; a bosonic double
    occupation gives w_ii = f(2 e_i) / sqrt(2).
    """
    if state.particles != 2:
        raise NotTwoParticle(f"state holds {state.particles} particles, need 2")
    if state.is_zero:
        raise ZeroState("the zero state has no coefficient matrix")
    m = state.modes
    w = np.zeros((m, m), dtype=complex)
    for occ, amp in state.amplitudes.items():
        occupied = [i for i in range(m) if occ[i]]
        if len(occupied) == 2:
            i, j = occupied
            w[i, j] = amp / 2
            w[j, i] = -amp / 2 if state.statistics is Statistics.FERMIONIC else amp / 2
        else:
            (i,) = occupied
            w[i, i] = amp / math.sqrt(2)
    return CoefficientMatrix(state.statistics, w)


def from_coefficient_matrix(matrix: CoefficientMatrix) -> FockState:
    """Two-particle state whose coefficient matrix is ``matrix``."""
    m = matrix.dimension
    w = matrix.entries
    amps: dict[Occupation, complex] = {}
    for i in range(m):
        for j in range(i + 1, m):
            sign = -1 if matrix.statistics is Statistics.FERMIONIC else 1
            occ = tuple(1 if k in (i, j) else 0 for k in range(m))
            amps[occ] = w[i, j] + sign * w[j, i]
        if matrix.statistics is Statistics.BOSONIC:
            occ = tuple(2 if k == i else 0 for k in range(m))
            amps[occ] = math.sqrt(2) * w[i, i]
    amps = prune_amplitudes(amps)
    if not amps:
        raise ZeroState("coefficient matrix has no significant entries")
    return FockState(matrix.statistics, m, 2, amps)


def _first_significant(vector: np.ndarray) -> int:
    for i, x in enumerate(vector):
        if abs(x) > COMPONENT_TOL:
            return i
    return int(np.argmax(np.abs(vector)))


def _canonical_full_phase(vector: np.ndarray) -> np.ndarray:
    x = vector[_first_significant(vector)]
    return vector * (abs(x) / x) if x else vector


def _canonical_sign(vector: np.ndarray) -> np.ndarray:
    x = vector[_first_significant(vector)]
    if x.real < -1e-12 or (abs(x.real) <= 1e-12 and x.imag < 0):
        return -vector
    return vector


def _deflate(basis: np.ndarray, used: list[np.ndarray]) -> np.ndarray:
    if basis.shape[1] == 0:
        return basis
    residual = basis.copy()
    for v in used:
        residual -= np.outer(v, v.conj() @ residual)
    u, s, _ = np.linalg.svd(residual, full_matrices=False)
    return u[:, s > 0.5]


def yang_decompose(matrix: CoefficientMatrix) -> YangForm:
    """Canonical congruence form of a pair-coefficient matrix.

    Eigenvectors of w^dag w are grouped by eigenvalue c^2 and paired (or
    fixed) under x -> conj(w x)/c, then phases are fixed so the first
    significant component of each pair's second column (fermions) or of
    each column (bosons, sign only) points along the positive axis.
    """
    w = matrix.entries
    dim = matrix.dimension
    fermionic = matrix.statistics is Statistics.FERMIONIC
    eigenvalues, eigenvectors = np.linalg.eigh(w.conj().T @ w)
    order = np.argsort(-eigenvalues)
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]
    scale = max(float(eigenvalues[0]), 0.0) if dim else 0.0
    cluster_tol = 1e-10 * max(1.0, scale)

    blocks: list[tuple[float, list[np.ndarray]]] = []
    kernel: list[np.ndarray] = []
    start = 0
    while start < dim:
        stop = start + 1
        while stop < dim and abs(eigenvalues[stop] - eigenvalues[start]) <= cluster_tol:
            stop += 1
        cluster_value = float(np.mean(eigenvalues[start:stop]))
        c = math.sqrt(max(cluster_value, 0.0))
        basis = eigenvectors[:, start:stop].copy()
        # Kernel detection happens on the eigenvalue, not on c = sqrt:
        # the square root would lift a 1e-17 rounding residue above any
        # reasonable cutoff on c.
        if cluster_value <= cluster_tol:
            for k in range(basis.shape[1]):
                kernel.append(_canonical_full_phase(basis[:, k]))
        elif fermionic:
            while basis.shape[1] >= 2:
                x = _canonical_full_phase(basis[:, 0])
                p = np.conj(w @ x) / c
                p -= x * (x.conj() @ p)
                p /= np.linalg.norm(p)
                blocks.append((c, [p, x]))
                basis = _deflate(basis, [x, p])
            for k in range(basis.shape[1]):
                kernel.append(_canonical_full_phase(basis[:, k]))
        else:
            while basis.shape[1] >= 1:
                y = basis[:, 0]
                v = y + np.conj(w @ y) / c
                if np.linalg.norm(v) < 1e-6:
                    v = 1j * y + np.conj(w @ (1j * y)) / c
                v /= np.linalg.norm(v)
                v = _canonical_sign(v)
                blocks.append((c, [v]))
                basis = _deflate(basis, [v])
        start = stop

    def block_position(block: tuple[float, list[np.ndarray]]) -> int:
        return min(_first_significant(col) for col in block[1])

    blocks.sort(key=lambda block: (-block[0], block_position(block)))
    columns = [col for _, cols in blocks for col in cols] + kernel
    basis_change = SingleParticleUnitary(np.column_stack(columns)) if columns else (
        SingleParticleUnitary(np.eye(dim))
    )
    values = tuple(c for c, _ in blocks)
    rank = sum(1 for c in values if c > VALUE_TOL)
    return YangForm(matrix.statistics, values, basis_change, rank)


def canonical_matrix(form: YangForm) -> np.ndarray:
    """Dense canonical matrix reproduced by U^T w U."""
    dim = form.basis_change.dimension
    out = np.zeros((dim, dim), dtype=complex)
    if form.statistics is Statistics.FERMIONIC:
        for r, c in enumerate(form.values):
            out[2 * r, 2 * r + 1] = c
            out[2 * r + 1, 2 * r] = -c
    else:
        for r, c in enumerate(form.values):
            out[r, r] = c
    return out


def rho1_in_yang_basis(state: FockState) -> DensityMatrix:
    """One-particle RDM of the state re-expressed in its canonical basis.

    The result is diagonal up to numerical error; fermionic eigenvalues
    occur in degenerate pairs, one pair per canonical block.
    """
    form = yang_decompose(coefficient_matrix(state))
    rotated = apply_single_particle_unitary(state, form.basis_change)
    return n_particle_rdm(rotated, 1)
