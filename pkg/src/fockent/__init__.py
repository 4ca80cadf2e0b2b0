"""Occupation-number entanglement for fixed-N fermion and boson states.

Sparse Fock states over M modes, conversions to and from first-quantized
product tensors, single-particle basis changes, n-particle and mode
reduced density matrices, partial and mode entanglement entropies,
canonical pair forms of two-particle states, and the half-filled
orbit/spin register mapping.
"""

from .errors import (
    BadOrder,
    BadPartition,
    CapacityExceeded,
    FockError,
    IncompatibleStates,
    MixedParticleNumber,
    NotAntisymmetric,
    NotHalfFilled,
    NotHermitian,
    NotPSD,
    NotSymmetric,
    NotTwoParticle,
    ParseError,
    PauliViolation,
    ZeroState,
)
from .fileio import (
    emit_state_file,
    emit_unitary_file,
    parse_state_file,
    parse_unitary_file,
)
from .first_quant import (
    ProductTensor,
    SymmetrizedCoefficients,
    extract_coefficients,
    from_product_tensor,
    symmetrize,
    to_product_tensor,
)
from .fock import (
    FockState,
    Statistics,
    annihilate,
    apply_operator_string,
    basis_dimension,
    create,
    enumerate_basis,
    inner_product,
    make_fock_state,
    random_fock_state,
    reorder_modes,
)
from .measures import (
    EntropyReport,
    configuration_count,
    diagonal_entropy,
    is_single_configuration,
    mode_entanglement_entropy,
    von_neumann_entropy,
)
from .rdm import (
    DensityMatrix,
    expectation_n_body,
    mode_rdm,
    n_particle_rdm,
    n_particle_rdm_via_symmetrized_sum,
    rdm_labels,
)
from .spinmap import (
    DOUBLE_DOT_GROUPING,
    OrbitGrouping,
    SpinRegister,
    build_double_dot_state,
    check_half_filling,
    from_spin_register,
    register_entropy,
    to_spin_register,
)
from .transform import (
    SingleParticleUnitary,
    apply_single_particle_unitary,
    apply_unitary_via_product_tensor,
    compose,
    dft_unitary,
)
from .yang import (
    CoefficientMatrix,
    YangForm,
    canonical_matrix,
    coefficient_matrix,
    from_coefficient_matrix,
    rho1_in_yang_basis,
    yang_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "BadOrder",
    "BadPartition",
    "CapacityExceeded",
    "CoefficientMatrix",
    "DOUBLE_DOT_GROUPING",
    "DensityMatrix",
    "EntropyReport",
    "FockError",
    "FockState",
    "IncompatibleStates",
    "MixedParticleNumber",
    "NotAntisymmetric",
    "NotHalfFilled",
    "NotHermitian",
    "NotPSD",
    "NotSymmetric",
    "NotTwoParticle",
    "OrbitGrouping",
    "ParseError",
    "PauliViolation",
    "ProductTensor",
    "SingleParticleUnitary",
    "SpinRegister",
    "Statistics",
    "SymmetrizedCoefficients",
    "YangForm",
    "ZeroState",
    "annihilate",
    "apply_operator_string",
    "apply_single_particle_unitary",
    "apply_unitary_via_product_tensor",
    "basis_dimension",
    "build_double_dot_state",
    "canonical_matrix",
    "check_half_filling",
    "coefficient_matrix",
    "compose",
    "configuration_count",
    "create",
    "diagonal_entropy",
    "dft_unitary",
    "emit_state_file",
    "emit_unitary_file",
    "enumerate_basis",
    "expectation_n_body",
    "extract_coefficients",
    "from_coefficient_matrix",
    "from_product_tensor",
    "from_spin_register",
    "inner_product",
    "is_single_configuration",
    "make_fock_state",
    "mode_entanglement_entropy",
    "mode_rdm",
    "n_particle_rdm",
    "n_particle_rdm_via_symmetrized_sum",
    "parse_state_file",
    "parse_unitary_file",
    "random_fock_state",
    "rdm_labels",
    "register_entropy",
    "reorder_modes",
    "rho1_in_yang_basis",
    "symmetrize",
    "to_product_tensor",
    "to_spin_register",
    "von_neumann_entropy",
    "yang_decompose",
]
