"""
Thermo field dynamics on a finite-dimensional system.

A Gibbs state ``rho = exp(-beta H) / Z`` is purified into the thermal vacuum
``|0(beta)> = vectorize(sqrt(rho))`` in the doubled space ``H (x) H~``. Thermal
averages can then be taken either as ``Tr(rho A)`` or as the vacuum
expectation value ``<0(beta)| A (x) I |0(beta)>``; the two must agree.

Building the vacuum from ``sqrt(rho)`` rather than from an eigenbasis means it
does not depend on which orthonormal eigenbasis of a degenerate ``rho`` one
picks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ComplexExpectation,
    DimensionMismatch,
    NegativeBeta,
    NonHermitianObservable,
    NotNormalized,
    NotTestSpace,
)
from .linalg import (
    HERMITIAN_TOL,
    as_square,
    hermitian_defect,
    hermitian_eig,
    matrix_sqrt_psd,
    require_hermitian,
)
from .liouville import DensityOperator, DoubledVector, devectorize, vectorize
from .rigged import (
    DecayClass,
    DecayProfile,
    SequenceVector,
    TransportedVector,
    classify,
    doubled_enumeration,
    transport,
)

VACUUM_NORM_TOL = 1e-12
IMAG_TOL = 1e-12


@dataclass(frozen=True)
class ThermalState:
    hamiltonian: np.ndarray
    beta: float
    partition: float
    rho: DensityOperator
    log_partition: float

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]


@dataclass(frozen=True)
class ThermalVacuum:
    state: DoubledVector
    beta: float

    def __post_init__(self):
        norm = self.state.norm()
        if abs(norm - 1.0) > VACUUM_NORM_TOL:
            raise NotNormalized(f"thermal vacuum has norm {norm:.15g}")


def gibbs(h, beta: float) -> ThermalState:
    """Gibbs state of a Hermitian Hamiltonian at inverse temperature ``beta >= 0``.

    The spectrum is shifted by its minimum before exponentiating, so large
    ``beta`` does not overflow; ``log_partition`` is always finite.
    """
    beta = float(beta)
    if not math.isfinite(beta) or beta < 0:
        raise NegativeBeta(f"beta must be finite and >= 0, got {beta}")
    h = require_hermitian(h)
    eig = hermitian_eig(h)
    e0 = eig.eigenvalues[0]
    weights = np.exp(-beta * (eig.eigenvalues - e0))
    z_shifted = float(weights.sum())
    log_z = math.log(z_shifted) - beta * e0
    rho = eig.reconstruct(lambda _: weights / z_shifted)
    h.flags.writeable = False
    try:
        partition = math.exp(log_z)
    except OverflowError:
        partition = math.inf
    return ThermalState(h, beta, partition, DensityOperator(rho), log_z)


def thermal_vacuum(s: ThermalState) -> ThermalVacuum:
    return ThermalVacuum(vectorize(matrix_sqrt_psd(s.rho.matrix)), s.beta)


def _observable(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = as_square(a)
    defect = hermitian_defect(a)
    if defect > tol:
        raise NonHermitianObservable(f"max |a - a^dagger| = {defect:.3e}")
    return a


def _real_part(z: complex, scale: float) -> float:
    if abs(z.imag) > IMAG_TOL * max(1.0, scale):
        raise ComplexExpectation(f"imaginary part {z.imag:.3e} in a Hermitian expectation value")
    return z.real


def thermal_average_operator(a, s: ThermalState) -> float:
    """``Tr(rho a)``."""
    a = _observable(a)
    if a.shape[0] != s.dim:
        raise DimensionMismatch(f"observable dim {a.shape[0]}, state dim {s.dim}")
    z = complex(np.trace(s.rho.matrix @ a))
    return _real_part(z, np.linalg.norm(a))


def thermal_average_tfd(a, v: ThermalVacuum) -> float:
    """``<0(beta)| a (x) I |0(beta)>`` contracted on the doubled space."""
    a = _observable(a)
    if a.shape[0] != v.state.dim:
        raise DimensionMismatch(f"observable dim {a.shape[0]}, vacuum dim {v.state.dim}")
    big = doubled_observable(a, v.state.dim)
    z = complex(np.vdot(v.state.components, big @ v.state.components))
    return _real_part(z, np.linalg.norm(a))


def tilde(a) -> np.ndarray:
    """Tilde conjugate ``C a C``: entrywise conjugate in the standard basis."""
    return np.conj(as_square(a))


def doubled_observable(a, d: int) -> np.ndarray:
    """``a (x) I_d``, the physical-sector copy of ``a`` on ``H (x) H~``."""
    a = as_square(a)
    if a.shape[0] != d:
        raise DimensionMismatch(f"operator dim {a.shape[0]}, expected {d}")
    return np.kron(a, np.eye(d))


def tilde_observable(a, d: int) -> np.ndarray:
    """``I_d (x) tilde(a)``; acts on vectorized ``x`` as ``x -> x a^dagger``."""
    a = as_square(a)
    if a.shape[0] != d:
        raise DimensionMismatch(f"operator dim {a.shape[0]}, expected {d}")
    return np.kron(np.eye(d), tilde(a))


# -- Liouville <-> TFD correspondence ----------------------------------------


@dataclass(frozen=True)
class LambdaImage:
    """Result of :func:`lambda_map`: the doubled vector and its transported element."""

    vector: DoubledVector
    element: TransportedVector

    @property
    def decay_class(self) -> DecayClass:
        return self.element.decay_class


def _enumeration_permutation(d: int) -> np.ndarray:
    # column n sends enumeration slot n to row-major slot i*d + j
    u = np.zeros((d * d, d * d))
    for n, (i, j) in enumerate(doubled_enumeration(d)):
        u[i * d + j, n] = 1.0
    return u


def operator_sequence(op, profile: DecayProfile) -> SequenceVector:
    """Entries of ``op`` listed in the doubled (Cantor) enumeration, certified by ``profile``."""
    op = as_square(op)
    coeffs = [op[i, j] for i, j in doubled_enumeration(op.shape[0])]
    return SequenceVector(np.array(coeffs, dtype=complex), profile)


def lambda_map(op, profile: DecayProfile) -> LambdaImage:
    """Send a test-space operator to its doubled vector.

    ``profile`` must certify the entries of ``op`` in the doubled enumeration
    and be of test-space class. The image is obtained by transporting that
    sequence through the permutation onto row-major order, so it carries the
    source's classification; its vector equals ``vectorize(op)``.

    Raises
    ------
    NotTestSpace
        If ``profile`` is not of test-space class.
    """
    cls = classify(profile)
    if cls is not DecayClass.TEST_SPACE:
        raise NotTestSpace(f"operator profile is {cls}")
    seq = operator_sequence(op, profile)
    d = as_square(op).shape[0]
    element = transport(_enumeration_permutation(d), seq)
    return LambdaImage(DoubledVector(d, element.coefficients), element)


def lambda_inverse(image: LambdaImage) -> tuple[np.ndarray, DecayClass]:
    """Recover the operator and its pulled-back class."""
    return devectorize(image.vector), image.element.decay_class
