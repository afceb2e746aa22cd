"""
Liouville space: operators on a d-dimensional Hilbert space with the
Hilbert-Schmidt inner product ``<a, b> = Tr(a^dagger b)``.

Vectorization convention
------------------------
``vectorize`` flattens row-major, so the matrix unit ``|e_i><e_j|`` goes to
``e_i (x) e~_j`` at component ``i*d + j``: the ket index lives on the physical
factor and the bra index on the tilde factor. Equivalently

    vectorize(|phi><psi|) = phi (x) C psi,

which makes vectorization unitary. Swapping the slots (``psi (x) C phi``) gives
an antiunitary map that conjugates inner products; it is kept as
:func:`vectorize_swapped` so that the difference can be demonstrated.

Under this convention left multiplication ``x -> a x`` is ``a (x) I`` and right
multiplication ``x -> x a`` is ``I (x) a^T``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadLength, DimensionMismatch, NotDensityOperator
from .linalg import (
    HERMITIAN_TOL,
    as_square,
    hermitian_defect,
    hermitian_eig,
    require_hermitian,
)

DENSITY_TOL = 1e-10


@dataclass(frozen=True)
class DoubledVector:
    """Vector in ``H (x) H~``; component ``i*dim + j`` multiplies ``e_i (x) e~_j``."""

    dim: int
    components: np.ndarray

    def __post_init__(self):
        c = np.array(self.components, dtype=complex).reshape(-1)
        if self.dim < 1 or c.size != self.dim**2:
            raise BadLength(f"{c.size} components cannot describe a doubled space of dim {self.dim}")
        c.flags.writeable = False
        object.__setattr__(self, "components", c)

    def norm(self) -> float:
        return float(np.linalg.norm(self.components))

    def inner(self, other: "DoubledVector") -> complex:
        """``<self, other>``, antilinear in ``self``."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim}")
        return complex(np.vdot(self.components, other.components))


@dataclass(frozen=True)
class SuperOperator:
    """Linear map on operators, stored as a ``dim**2 x dim**2`` matrix on vectorized operators."""

    matrix: np.ndarray
    dim: int

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (self.dim**2, self.dim**2):
            raise DimensionMismatch(f"shape {m.shape} does not match dim {self.dim}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def apply(self, x) -> np.ndarray:
        """Act on an operator ``x`` and return the resulting operator."""
        v = vectorize(x)
        if v.dim != self.dim:
            raise DimensionMismatch(f"operator dim {v.dim}, superoperator dim {self.dim}")
        return devectorize(DoubledVector(self.dim, self.matrix @ v.components))

    def __matmul__(self, other):
        if isinstance(other, SuperOperator):
            if other.dim != self.dim:
                raise DimensionMismatch(f"dims {self.dim} and {other.dim}")
            return SuperOperator(self.matrix @ other.matrix, self.dim)
        if isinstance(other, DoubledVector):
            if other.dim != self.dim:
                raise DimensionMismatch(f"dims {self.dim} and {other.dim}")
            return DoubledVector(self.dim, self.matrix @ other.components)
        return NotImplemented

    def spectrum(self) -> np.ndarray:
        return np.linalg.eigvals(self.matrix)


class DensityOperator:
    """Hermitian, positive semidefinite, unit-trace matrix.

    Eigenvalues in ``[-1e-10, 0)`` are clamped to zero and the result is
    renormalized to unit trace.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix, tol: float = DENSITY_TOL):
        m = as_square(matrix)
        defect = hermitian_defect(m)
        if defect > tol:
            raise NotDensityOperator(f"not Hermitian: max |rho - rho^dagger| = {defect:.3e}")
        tr = np.trace(m)
        if abs(tr - 1.0) > tol:
            raise NotDensityOperator(f"trace {tr:.12g} differs from 1")
        eig = hermitian_eig(m, tol=tol)
        if eig.eigenvalues[0] < -tol:
            raise NotDensityOperator(f"negative eigenvalue {eig.eigenvalues[0]:.3e}")
        if eig.eigenvalues[0] < 0:
            w = np.clip(eig.eigenvalues, 0.0, None)
            m = eig.reconstruct(lambda _: w / w.sum())
        m = 0.5 * (m + m.conj().T)
        m.flags.writeable = False
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __repr__(self):
        return f"DensityOperator(dim={self.dim})"


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product ``Tr(a^dagger b)``."""
    a, b = as_square(a), as_square(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape}")
    return complex(np.trace(a.conj().T @ b))


def vectorize(a) -> DoubledVector:
    a = as_square(a)
    return DoubledVector(a.shape[0], a.reshape(-1))


def vectorize_swapped(a) -> DoubledVector:
    """Opposite slot order, ``|phi><psi| -> psi (x) C phi``; antiunitary."""
    a = as_square(a)
    return DoubledVector(a.shape[0], a.conj().T.reshape(-1))


def devectorize(v) -> np.ndarray:
    if isinstance(v, DoubledVector):
        return v.components.reshape(v.dim, v.dim).copy()
    c = np.asarray(v, dtype=complex).reshape(-1)
    d = math.isqrt(c.size)
    if d == 0 or d * d != c.size:
        raise BadLength(f"length {c.size} is not a nonzero perfect square")
    return c.reshape(d, d).copy()


def rank_one(phi, psi) -> np.ndarray:
    """The operator ``x -> <phi, x> psi``, i.e. the matrix ``psi phi^dagger``."""
    phi = np.asarray(phi, dtype=complex).reshape(-1)
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if phi.size != psi.size:
        raise DimensionMismatch(f"lengths {phi.size} and {psi.size}")
    return np.outer(psi, phi.conj())


def left_mult_super(a) -> SuperOperator:
    a = as_square(a)
    d = a.shape[0]
    return SuperOperator(np.kron(a, np.eye(d)), d)


def right_mult_super(a) -> SuperOperator:
    """Superoperator ``x -> x a``, matrix ``I (x) a^T``.

    ``a^T`` is the tilde conjugate ``C a^dagger C`` of ``a^dagger``.
    """
    a = as_square(a)
    d = a.shape[0]
    return SuperOperator(np.kron(np.eye(d), a.T), d)


def commutator_super(h, tol: float = HERMITIAN_TOL) -> SuperOperator:
    """Superoperator ``x -> h x - x h`` for Hermitian ``h``."""
    h = require_hermitian(h, tol)
    d = h.shape[0]
    eye = np.eye(d)
    return SuperOperator(np.kron(h, eye) - np.kron(eye, h.T), d)


def partial_trace_tilde(v) -> np.ndarray:
    """Reduced operator of ``|v><v|`` on the physical factor."""
    m = devectorize(v)
    return m @ m.conj().T
