"""
Dense complex linear algebra primitives.

Everything downstream (Liouville space, thermal states, the sequence-space
model) is built from the handful of functions here. Matrices are plain
``numpy`` arrays of dtype ``complex128``; all functions are pure and return
fresh arrays.

The Hermitian eigensolver is a cyclic complex Jacobi iteration. Dimensions in
this package are small (d <= 8, superoperators d**2 <= 64), and Jacobi gives
eigenvectors that are orthonormal to working precision, which the
reconstruction and purification checks rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrix, NegativeEigenvalue, NonSquare, NotConverged, NotHermitian

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-12
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class HermitianEigen:
    """Spectral decomposition ``a = V diag(eigenvalues) V^dagger``.

    Eigenvalues are real and ascending; each eigenvector column has its
    largest-magnitude component made real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        self.eigenvalues.flags.writeable = False
        self.eigenvectors.flags.writeable = False

    def reconstruct(self, fn=None) -> np.ndarray:
        """Return ``V diag(fn(eigenvalues)) V^dagger`` (``fn`` defaults to identity)."""
        w = self.eigenvalues if fn is None else fn(self.eigenvalues)
        v = self.eigenvectors
        return (v * w) @ v.conj().T


def as_matrix(a) -> np.ndarray:
    """Copy ``a`` into a finite, non-empty 2-D complex array."""
    m = np.array(a, dtype=complex)
    if m.ndim != 2 or m.size == 0:
        raise InvalidMatrix(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix entries must be finite")
    return m


def as_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitian_defect(a: np.ndarray) -> float:
    """Largest entry of ``|a - a^dagger|``."""
    return float(np.max(np.abs(a - a.conj().T)))


def require_hermitian(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate Hermiticity within ``tol`` and return the symmetrized matrix."""
    m = as_square(a)
    defect = hermitian_defect(m)
    if defect > tol:
        raise NotHermitian(f"max |a - a^dagger| = {defect:.3e} exceeds {tol:g}")
    return 0.5 * (m + m.conj().T)


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_square(a)))


def conj_c(x) -> np.ndarray:
    """Antilinear conjugation C: entrywise complex conjugate in the standard basis.

    C is basis dependent; every tilde-conjugation result in this package is
    relative to the standard basis.
    """
    return np.conj(np.asarray(x, dtype=complex))


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # a is Hermitian and is overwritten.
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return a.diagonal().real.copy(), v

    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off <= JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                # A <- A G, then A <- G^dagger A, with G = diag(1, conj(phase)) . R(c, s)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * phase.conjugate() * col_q
                a[:, q] = s * col_p + c * phase.conjugate() * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * phase.conjugate() * vq
                v[:, q] = s * vp + c * phase.conjugate() * vq
    else:
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off > JACOBI_TOL * scale:
            raise NotConverged(
                f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (off-norm {off:.3e})"
            )
    return a.diagonal().real.copy(), v


def _fix_phases(v: np.ndarray) -> np.ndarray:
    idx = np.argmax(np.abs(v), axis=0)
    pivots = v[idx, np.arange(v.shape[1])]
    return v * (pivots.conj() / np.abs(pivots))


def hermitian_eig(a, tol: float = HERMITIAN_TOL) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    The input is symmetrized as ``(a + a^dagger)/2`` after the Hermiticity
    check. Converges when the off-diagonal Frobenius norm drops below
    ``1e-14 * ||a||_F``; raises :class:`NotConverged` after 100 sweeps.

    Raises
    ------
    NonSquare, NotHermitian
    """
    m = require_hermitian(a, tol)
    w, v = _jacobi(m)
    order = np.argsort(w, kind="stable")
    return HermitianEigen(w[order], _fix_phases(v[:, order]))


def matrix_exp_hermitian(a, s: float) -> np.ndarray:
    """``exp(s * a)`` for Hermitian ``a`` via its spectral decomposition."""
    eig = hermitian_eig(a)
    out = eig.reconstruct(lambda w: np.exp(s * w))
    return 0.5 * (out + out.conj().T)


def matrix_sqrt_psd(a) -> np.ndarray:
    """Positive square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-12, 0)`` are treated as rounding noise and clamped
    to zero; anything more negative raises :class:`NegativeEigenvalue`.
    """
    eig = hermitian_eig(a)
    lowest = eig.eigenvalues[0]
    if lowest < -PSD_TOL:
        raise NegativeEigenvalue(f"smallest eigenvalue {lowest:.3e} is below -{PSD_TOL:g}")
    out = eig.reconstruct(lambda w: np.sqrt(np.clip(w, 0.0, None)))
    return 0.5 * (out + out.conj().T)
