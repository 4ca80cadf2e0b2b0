"""Conversions between occupation amplitudes and first-quantized tensors.

Three coefficient systems describe the same N-particle vector:

* ``q``: the dense product-basis tensor, q(k_1, ..., k_N) multiplying
  |k_1>|k_2>...|k_N>.  It is (anti)symmetric and carries the full norm,
  sum |q|^2 = sum |f|^2.
* ``f``: the occupation amplitude of the unit-norm basis state |n_1...n_M>.
  On the sorted index tuple of a configuration,
  q(sorted) = sqrt(prod n_a! / N!) * f.
* symmetrized-basis coefficients keyed by sorted index tuples, in two
  flavors: ``h_normalized`` multiplies unit-norm (anti)symmetrized kets and
  equals f; ``g_unnormalized`` multiplies the bare sum over all N!
  permuted product kets, g = f / sqrt(N! * prod n_a!).  The g normalization
  is fixed by brute-force expansion of that permutation sum.

The dense tensor is capped at 10^6 entries; larger requests raise
CapacityExceeded rather than allocating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Literal

import numpy as np

from .errors import CapacityExceeded, NotAntisymmetric, NotSymmetric, ZeroState
from .fock import (
    FockState,
    Occupation,
    PRUNE_TOL,
    Statistics,
    enumerate_basis,
    inversion_parity,
    occupation_to_indices,
)

TENSOR_CAPACITY = 10**6
SYMMETRY_TOL = 1e-10

CoefficientFlavor = Literal["g_unnormalized", "h_normalized"]


def _check_exchange_symmetry(entries: np.ndarray, statistics: Statistics) -> None:
    sign = statistics.exchange_sign
    n = entries.ndim
    for axis in range(n - 1):
        axes = list(range(n))
        axes[axis], axes[axis + 1] = axes[axis + 1], axes[axis]
        deviation = np.max(np.abs(entries - sign * np.transpose(entries, axes)))
        if deviation > SYMMETRY_TOL:
            if statistics is Statistics.FERMIONIC:
                raise NotAntisymmetric(
                    f"tensor deviates from antisymmetry by {deviation:.3e}"
                )
            raise NotSymmetric(f"tensor deviates from symmetry by {deviation:.3e}")


@dataclass(frozen=True)
class ProductTensor:
    """Dense first-quantized tensor over the product basis, shape (M,)*N."""

    statistics: Statistics
    modes: int
    particles: int
    entries: np.ndarray

    def __post_init__(self):
        if self.modes**self.particles > TENSOR_CAPACITY:
            raise CapacityExceeded(
                f"M^N = {self.modes}**{self.particles} exceeds {TENSOR_CAPACITY} entries"
            )
        expected = (self.modes,) * self.particles
        if self.entries.shape != expected:
            raise ValueError(f"tensor shape {self.entries.shape} != {expected}")
        _check_exchange_symmetry(self.entries, self.statistics)


@dataclass(frozen=True)
class SymmetrizedCoefficients:
    """Coefficients keyed by sorted index tuples, tagged with their flavor."""

    statistics: Statistics
    modes: int
    particles: int
    flavor: CoefficientFlavor
    entries: dict[tuple[int, ...], complex]


def symmetrize(raw: np.ndarray, statistics: Statistics) -> ProductTensor:
    """Project a raw tensor onto the (anti)symmetric subspace.

    Applies (1/N!) sum_P (+-1)^P over axis permutations.  The projector is
    idempotent, so already-(anti)symmetric input passes through unchanged.
    """
    arr = np.asarray(raw, dtype=complex)
    n = arr.ndim
    modes = arr.shape[0] if n else 1
    if arr.shape != (modes,) * n:
        raise ValueError("tensor axes must all have the same length")
    if modes**n > TENSOR_CAPACITY:
        raise CapacityExceeded(f"tensor exceeds {TENSOR_CAPACITY} entries")
    out = np.zeros_like(arr)
    for perm in permutations(range(n)):
        sign = inversion_parity(perm) if statistics is Statistics.FERMIONIC else 1
        out += sign * np.transpose(arr, perm)
    out /= math.factorial(n)
    return ProductTensor(statistics, modes, n, out)


def to_product_tensor(state: FockState) -> ProductTensor:
    """Expand occupation amplitudes into the dense product-basis tensor.

    For each configuration, every distinct arrangement of its index multiset
    receives sqrt(prod n_a! / N!) * f times the arrangement parity (fermions)
    or +1 (bosons).  Norm is preserved: sum |q|^2 = sum |f|^2.
    """
    modes, n = state.modes, state.particles
    if modes**n > TENSOR_CAPACITY:
        raise CapacityExceeded(
            f"M^N = {modes}**{n} exceeds {TENSOR_CAPACITY} entries"
        )
    q = np.zeros((modes,) * n, dtype=complex)
    fermionic = state.statistics is Statistics.FERMIONIC
    for occ, amp in state.amplitudes.items():
        base = occupation_to_indices(occ)
        factor = math.sqrt(
            math.prod(math.factorial(k) for k in occ) / math.factorial(n)
        )
        for perm in set(permutations(base)):
            sign = inversion_parity(perm) if fermionic else 1
            q[perm] = sign * factor * amp
    return ProductTensor(state.statistics, modes, n, q)


def from_product_tensor(tensor: ProductTensor) -> FockState:
    """Exact inverse of to_product_tensor on its image.

    Reads f(occ) = sqrt(N! / prod n_a!) * q(sorted indices).  A tensor with
    no significant sorted entries raises ZeroState.
    """
    modes, n = tensor.modes, tensor.particles
    amps: dict[Occupation, complex] = {}
    for occ in enumerate_basis(tensor.statistics, modes, n):
        key = occupation_to_indices(occ)
        value = complex(tensor.entries[key]) * math.sqrt(
            math.factorial(n) / math.prod(math.factorial(k) for k in occ)
        )
        if abs(value) > PRUNE_TOL:
            amps[occ] = value
    if not amps:
        raise ZeroState("tensor has no significant (anti)symmetric content")
    return FockState(tensor.statistics, modes, n, amps)


def extract_coefficients(
    state: FockState, flavor: CoefficientFlavor
) -> SymmetrizedCoefficients:
    """Coefficients of the state over (anti)symmetrized kets.

    ``h_normalized`` returns f itself, keyed by the sorted index tuple of
    each configuration.  ``g_unnormalized`` divides by sqrt(N! prod n_a!),
    the squared norm factor of the bare permutation sum.
    """
    if flavor not in ("g_unnormalized", "h_normalized"):
        raise ValueError(f"unknown coefficient flavor {flavor!r}")
    n = state.particles
    entries: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.amplitudes.items():
        key = occupation_to_indices(occ)
        if flavor == "h_normalized":
            entries[key] = amp
        else:
            entries[key] = amp / math.sqrt(
                math.factorial(n) * math.prod(math.factorial(k) for k in occ)
            )
    return SymmetrizedCoefficients(state.statistics, state.modes, n, flavor, entries)
