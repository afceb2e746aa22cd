"""Thermo field dynamics and Liouville space on finite-dimensional systems,
with a sequence-space model of the rigged (Gelfand triplet) structure."""

from .errors import *  # noqa: F401,F403
from .linalg import (
    HermitianEigen,
    adjoint,
    conj_c,
    hermitian_eig,
    kron,
    matrix_exp_hermitian,
    matrix_sqrt_psd,
    trace,
)
from .liouville import (
    DensityOperator,
    DoubledVector,
    SuperOperator,
    commutator_super,
    devectorize,
    hs_inner,
    left_mult_super,
    partial_trace_tilde,
    rank_one,
    right_mult_super,
    vectorize,
)
from .rigged import (
    DecayClass,
    DecayProfile,
    PairingResult,
    SequenceVector,
    TransportedVector,
    classify,
    pair,
    seminorm,
    tensor_profile,
    transport,
)
from .tfd import (
    ThermalState,
    ThermalVacuum,
    doubled_observable,
    gibbs,
    lambda_inverse,
    lambda_map,
    thermal_average_operator,
    thermal_average_tfd,
    thermal_vacuum,
    tilde,
    tilde_observable,
)

__version__ = "0.1.0"
