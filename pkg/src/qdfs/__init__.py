"""Deformed-symmetry protected registers: exact algebra, dense dynamics.

The symbolic layer (laurent, algebra, hopf) verifies the defining
relations and Hopf structure over an exact coefficient ring.  The
numeric layer (spinops, states, invariant) realizes the generators on
qubit chains and finds the protected subspace.  The dynamics layer
(bath, hamiltonian, evolution) couples the chain to truncated oscillator
modes and checks that protected states ride through unchanged.
"""

__version__ = "0.1.0"

from .algebra import (
    GEN_ANTIPODE,
    GEN_COPRODUCT,
    GEN_COUNIT,
    NCPoly,
    TensorPoly,
    antipode,
    coproduct,
    counit,
    is_normal,
    normal_order,
    pretty_word,
    rewrite_once,
)
from .bath import BathSpec, bath_operators
from .config import ConfigError, RunConfig, load_config
from .evolution import (
    DensityMatrix,
    EvolutionReport,
    InvarianceError,
    Propagator,
    evolve,
    partial_trace_bath,
    purity,
    theorem1_check,
    theorem2_check,
    trace_distance,
)
from .hamiltonian import (
    HamiltonianSpec,
    HermiticityError,
    assemble_hamiltonian,
    chi_effective,
    default_interaction,
)
from .hopf import (
    AxiomCheck,
    AxiomReport,
    check_fundamental_unitarity,
    check_hopf_axioms,
    fundamental_matrix,
)
from .invariant import (
    InvariantSubspace,
    classical_singlet_count,
    invariance_residual,
    joint_kernel,
    singlet_multiplicity,
)
from .laurent import LaurentPoly
from .spinops import (
    PRESET_STANDARD,
    PRESET_VERBATIM,
    SpinOperatorSet,
    base_operators,
    build_operators,
    extend_by_qubit,
)
from .states import QState, product_state, singlet_state, triplet_states

__all__ = [
    "__version__",
    "AxiomCheck",
    "AxiomReport",
    "BathSpec",
    "ConfigError",
    "DensityMatrix",
    "EvolutionReport",
    "GEN_ANTIPODE",
    "GEN_COPRODUCT",
    "GEN_COUNIT",
    "HamiltonianSpec",
    "HermiticityError",
    "InvarianceError",
    "InvariantSubspace",
    "LaurentPoly",
    "NCPoly",
    "PRESET_STANDARD",
    "PRESET_VERBATIM",
    "Propagator",
    "QState",
    "RunConfig",
    "SpinOperatorSet",
    "TensorPoly",
    "antipode",
    "assemble_hamiltonian",
    "base_operators",
    "bath_operators",
    "build_operators",
    "check_fundamental_unitarity",
    "check_hopf_axioms",
    "chi_effective",
    "classical_singlet_count",
    "coproduct",
    "counit",
    "default_interaction",
    "evolve",
    "extend_by_qubit",
    "fundamental_matrix",
    "invariance_residual",
    "is_normal",
    "joint_kernel",
    "load_config",
    "normal_order",
    "partial_trace_bath",
    "pretty_word",
    "product_state",
    "purity",
    "rewrite_once",
    "singlet_multiplicity",
    "singlet_state",
    "theorem1_check",
    "theorem2_check",
    "trace_distance",
    "triplet_states",
]
