"""Entropies and configuration counting.

All entropies are reported in bits (log base 2).  Density matrices are
divided by their trace before diagonalization, so partial entropies of
trace-N(N-1).. matrices and mode entropies share one convention.
Eigenvalues in [-1e-10, 0) are clamped to zero; anything more negative
raises NotPSD.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPSD, ZeroState
from .fock import FockState, SIGNIFICANT_TOL
from .rdm import DensityMatrix, mode_rdm

EIGENVALUE_CLAMP = 1e-10


@dataclass(frozen=True)
class EntropyReport:
    """Entropy value together with the spectrum it was computed from."""

    value_bits: float
    eigenvalues: tuple[float, ...]
    partition: str


def _spectrum_bits(matrix: np.ndarray) -> tuple[float, tuple[float, ...]]:
    trace = float(np.trace(matrix).real)
    if abs(trace) < SIGNIFICANT_TOL:
        raise ZeroState("cannot normalize a matrix with vanishing trace")
    eigenvalues = np.linalg.eigvalsh(matrix / trace)
    lowest = float(eigenvalues.min(initial=0.0))
    if lowest < -EIGENVALUE_CLAMP:
        raise NotPSD(f"eigenvalue {lowest:.3e} below -{EIGENVALUE_CLAMP}")
    clamped = np.clip(eigenvalues, 0.0, None)
    bits = float(-sum(v * math.log2(v) for v in clamped if v > 0.0))
    spectrum = tuple(sorted((float(v) for v in clamped), reverse=True))
    return bits, spectrum


def von_neumann_entropy(rho: DensityMatrix, partition: str = "") -> EntropyReport:
    """Spectral entropy of the trace-normalized matrix, in bits."""
    bits, spectrum = _spectrum_bits(rho.entries)
    return EntropyReport(bits, spectrum, partition)


def diagonal_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits of the diagonal of the trace-normalized matrix.

    This is the entropy of the matrix dephased in its stated basis.  It is
    basis dependent and upper-bounds the spectral entropy; the two agree
    exactly when the matrix is diagonal.
    """
    diag = np.real(np.diag(rho.entries))
    total = float(diag.sum())
    if abs(total) < SIGNIFICANT_TOL:
        raise ZeroState("cannot normalize a matrix with vanishing trace")
    probabilities = diag / total
    if probabilities.min(initial=0.0) < -EIGENVALUE_CLAMP:
        raise NotPSD("diagonal entry below -1e-10")
    return float(-sum(p * math.log2(p) for p in probabilities if p > 0.0))


def configuration_count(state: FockState) -> int:
    """Number of occupation configurations with amplitude above 1e-10."""
    return sum(1 for a in state.amplitudes.values() if abs(a) > SIGNIFICANT_TOL)


def is_single_configuration(state: FockState) -> bool:
    """True when exactly one occupation amplitude is significant."""
    return configuration_count(state) == 1


def mode_entanglement_entropy(state: FockState, partition: tuple[int, ...]) -> EntropyReport:
    """Bipartite occupation-number entanglement across a mode partition."""
    rho = mode_rdm(state, tuple(partition))
    description = "modes " + ",".join(str(m) for m in partition)
    return von_neumann_entropy(rho, partition=description)
