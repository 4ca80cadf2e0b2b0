"""Reduced density matrices of pure fixed-N states.

Conventions
-----------
* n-particle RDM: element (k'; k) = Tr(a_{k'_1}...a_{k'_n} rho
  a_{k_n}^dag...a_{k_1}^dag) with rho the normalized pure-state projector.
  Row and column labels are one representative index tuple per exchange
  class: strictly increasing tuples for fermions, non-decreasing for
  bosons, in lexicographic order.  Representative elements carry the
  n! / sqrt(prod m! prod m'!) multiplicity weight so the trace equals the
  falling factorial N(N-1)...(N-n+1), and the n = N matrix is
  N! |h><h| (rank one for every pure state).
* Mode RDM over a partition A: <n'_A| rho_A |n_A> =
  sum_rest f(n'_A, rest) conj(f(n_A, rest)) after a signed permutation
  brings the partition modes to the front.  Only one particle total per
  block can appear, so entries between different partition totals are
  structurally exact zeros.  Trace 1.
* Inputs need not be unit norm: the projector is divided by <psi|psi>.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np

from .errors import BadOrder, BadPartition, NotHermitian, ZeroState
from .fock import (
    FockState,
    Occupation,
    SIGNIFICANT_TOL,
    Statistics,
    annihilate,
    apply_operator_string,
    create,
    enumerate_basis,
    inner_product,
    reorder_modes,
)
from .first_quant import to_product_tensor

HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian matrix with physical labels and a declared trace."""

    labels: tuple
    entries: np.ndarray
    trace_convention: float

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("density matrix must be square")
        if len(self.labels) != arr.shape[0]:
            raise ValueError("label count must match matrix dimension")
        deviation = np.max(np.abs(arr - arr.conj().T)) if arr.size else 0.0
        if deviation > HERMITICITY_TOL:
            raise NotHermitian(f"matrix deviates from Hermiticity by {deviation:.3e}")
        object.__setattr__(self, "entries", arr)

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def rdm_labels(statistics: Statistics, modes: int, n: int) -> list[tuple[int, ...]]:
    """Representative index tuples labelling the order-n RDM."""
    if statistics is Statistics.FERMIONIC:
        return list(combinations(range(modes), n))
    return list(combinations_with_replacement(range(modes), n))


def _multiplicity_weight(label: tuple[int, ...]) -> float:
    n = len(label)
    rep = math.prod(math.factorial(m) for m in Counter(label).values())
    return math.sqrt(math.factorial(n) / rep)


def _falling_factorial(total: int, n: int) -> float:
    return float(math.factorial(total) // math.factorial(total - n))


def n_particle_rdm(state: FockState, n: int) -> DensityMatrix:
    """Order-n reduced density matrix from annihilation-string overlaps.

    For label t, phi_t = a_{t_1}...a_{t_n}|psi> (rightmost factor first);
    the matrix is the multiplicity-weighted Gram matrix of those images.
    """
    if not 1 <= n <= state.particles:
        raise BadOrder(f"order {n} outside 1..{state.particles}")
    norm_sq = sum(abs(a) ** 2 for a in state.amplitudes.values())
    if norm_sq < SIGNIFICANT_TOL**2:
        raise ZeroState("cannot reduce the zero state")
    labels = rdm_labels(state.statistics, state.modes, n)
    images = [
        apply_operator_string(state, [annihilate(m) for m in reversed(t)])
        for t in labels
    ]
    weights = [_multiplicity_weight(t) for t in labels]
    dim = len(labels)
    out = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        for j in range(i, dim):
            value = weights[i] * weights[j] * inner_product(images[j], images[i])
            out[i, j] = value
            out[j, i] = value.conjugate()
    out /= norm_sq
    return DensityMatrix(tuple(labels), out, _falling_factorial(state.particles, n))


def n_particle_rdm_via_symmetrized_sum(state: FockState, n: int) -> DensityMatrix:
    """Same matrix from the first-quantized tensor.

    Contracts the trailing N - n indices of q against conj(q) without
    restriction and multiplies by N!/(N-n)!, then applies the same
    representative-label multiplicity weights as the direct route.
    """
    if not 1 <= n <= state.particles:
        raise BadOrder(f"order {n} outside 1..{state.particles}")
    total = state.particles
    tensor = to_product_tensor(state)
    norm = math.sqrt(sum(abs(a) ** 2 for a in state.amplitudes.values()))
    if norm < SIGNIFICANT_TOL:
        raise ZeroState("cannot reduce the zero state")
    q = tensor.entries / norm
    rest = list(range(n, total))
    contracted = np.tensordot(q, q.conj(), axes=(rest, rest))
    contracted *= _falling_factorial(total, n)
    labels = rdm_labels(state.statistics, state.modes, n)
    weights = [_multiplicity_weight(t) for t in labels]
    dim = len(labels)
    out = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(labels):
        for j, col in enumerate(labels):
            out[i, j] = weights[i] * weights[j] * contracted[row + col]
    out = (out + out.conj().T) / 2
    return DensityMatrix(tuple(labels), out, _falling_factorial(total, n))


def _partition_labels(
    statistics: Statistics, size: int, complement: int, particles: int
) -> list[Occupation]:
    if statistics is Statistics.FERMIONIC:
        low = max(0, particles - complement)
        high = min(particles, size)
    else:
        low = 0 if complement else particles
        high = particles
    labels: list[Occupation] = []
    for t in range(low, high + 1):
        labels.extend(enumerate_basis(statistics, size, t))
    return labels


def mode_rdm(state: FockState, partition: tuple[int, ...]) -> DensityMatrix:
    """Reduced density matrix of a strict subset of modes.

    Labels are partition occupation patterns grouped by particle total
    (ascending), each block in descending lexicographic order.  Blocks with
    different totals never mix, so those entries are exact zeros.
    """
    partition = tuple(partition)
    if not partition:
        raise BadPartition("partition must name at least one mode")
    if len(set(partition)) != len(partition):
        raise BadPartition("partition modes must be distinct")
    if any(not 0 <= m < state.modes for m in partition):
        raise BadPartition(f"partition modes must lie in 0..{state.modes - 1}")
    if len(partition) == state.modes:
        raise BadPartition("partition must be a strict subset of the modes")
    norm_sq = sum(abs(a) ** 2 for a in state.amplitudes.values())
    if norm_sq < SIGNIFICANT_TOL**2:
        raise ZeroState("cannot reduce the zero state")
    size = len(partition)
    complement = [m for m in range(state.modes) if m not in partition]
    reordered = reorder_modes(state, list(partition) + complement)
    labels = _partition_labels(state.statistics, size, len(complement), state.particles)
    index = {occ: i for i, occ in enumerate(labels)}
    by_rest: dict[Occupation, list[tuple[int, complex]]] = {}
    for occ, amp in reordered.amplitudes.items():
        front, rest = occ[:size], occ[size:]
        by_rest.setdefault(rest, []).append((index[front], amp))
    out = np.zeros((len(labels), len(labels)), dtype=complex)
    for entries in by_rest.values():
        for i, amp_i in entries:
            for j, amp_j in entries:
                out[i, j] += amp_i * amp_j.conjugate()
    out /= norm_sq
    return DensityMatrix(tuple(labels), out, 1.0)


def expectation_n_body(
    state: FockState,
    n: int,
    elements: dict[tuple[tuple[int, ...], tuple[int, ...]], complex],
) -> complex:
    """<psi| sum O(i'; i) a_{i'_1}^dag..a_{i'_n}^dag a_{i_n}..a_{i_1} |psi>.

    The element table maps (creation tuple, annihilation tuple) pairs to
    coefficients and must be Hermitian: O(i; i') = conj(O(i'; i)).
    Normalized by <psi|psi>; for n = 1 this equals Tr(O rho1).
    """
    if not 1 <= n <= state.particles:
        raise BadOrder(f"order {n} outside 1..{state.particles}")
    norm_sq = sum(abs(a) ** 2 for a in state.amplitudes.values())
    if norm_sq < SIGNIFICANT_TOL**2:
        raise ZeroState("cannot take expectations in the zero state")
    scale = max((abs(v) for v in elements.values()), default=0.0)
    for (bra, ket), value in elements.items():
        if len(bra) != n or len(ket) != n:
            raise BadOrder(f"element ({bra}; {ket}) does not have order {n}")
        partner = elements.get((ket, bra), 0j)
        if abs(partner - value.conjugate()) > HERMITICITY_TOL * max(1.0, scale):
            raise NotHermitian(f"element table is not Hermitian at ({bra}; {ket})")
    total = 0j
    for (bra, ket), value in elements.items():
        if not value:
            continue
        ops = [annihilate(m) for m in ket] + [create(m) for m in reversed(bra)]
        image = apply_operator_string(state, ops)
        total += value * inner_product(state, image)
    return total / norm_sq
