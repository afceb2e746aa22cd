"""Brute-force evidence for sequence-space membership.

Works from the profile's fields directly (log space, so growing profiles do not
overflow) and never calls the library's classifier or seminorm code.
"""

import numpy as np

GRID = 10**4
MAX_ORDER = 16


def log_terms(p, n):
    n = np.asarray(n, dtype=float)
    with np.errstate(divide="ignore"):
        # geometric rate 0 is the zero sequence
        if p.constant == 0 or p.support == 0 or (p.kind == "geometric" and p.rate == 0):
            out = np.full(n.shape, -np.inf)
        elif p.kind == "geometric":
            out = np.log(p.constant) + n * np.log(p.rate)
        elif p.kind == "power":
            out = np.log(p.constant) + p.rate * np.log1p(n)
        else:
            out = np.log(p.constant) + (1 + n) ** p.exponent * np.log(p.rate)
    if p.support is not None:
        out = np.where(n >= p.support, -np.inf, out)
    return out


def grows(logw, nmax=GRID):
    """Monotone growth over the last half of the grid, ending at the maximum."""
    tail = logw[nmax // 2 :]
    if not np.isfinite(tail[-1]):
        return False
    return bool(tail[-1] > tail[0] + 1e-9 and np.all(np.diff(tail) >= -1e-12))


def seminorm_diverges(p, k, nmax=GRID):
    n = np.arange(nmax + 1)
    return grows(k * np.log1p(n) + log_terms(p, n), nmax)


def grid_seminorm(p, k, nmax=GRID):
    n = np.arange(nmax + 1)
    return float(np.exp(np.max(k * np.log1p(n) + log_terms(p, n))))


def dyadic_blocks_shrink(p, j=12):
    """Cauchy condensation on |phi_n|^2: compare the two last dyadic blocks below the grid."""

    def block(jj):
        n = np.arange(2**jj, 2 ** (jj + 1))
        lt = 2 * log_terms(p, n)
        m = np.max(lt)
        if not np.isfinite(m):
            return -np.inf
        return m + np.log(np.sum(np.exp(lt - m)))

    return block(j) < block(j - 1)


def grid_class(p, nmax=GRID):
    """Classify from grid evidence alone."""
    if not any(seminorm_diverges(p, k, nmax) for k in range(MAX_ORDER + 1)):
        return "TestSpace"
    if seminorm_diverges(p, -MAX_ORDER, nmax):
        return "OutsideDual"
    return "HilbertOnly" if dyadic_blocks_shrink(p) else "DualOnly"
