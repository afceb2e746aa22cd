"""
Truncated weighted sequence spaces as a model of a Gelfand triplet.

A vector is a finite list of coefficients together with a :class:`DecayProfile`
that certifies how the (unstored) rest of the sequence behaves. The test space
is modeled by rapidly decreasing sequences with the seminorm family

    p_k(phi) = sup_n (1 + n)**k |phi_n|,      k = 0, 1, ..., 16,

the Hilbert space is l2, and the anti-dual is the space of polynomially
bounded sequences paired antilinearly against test sequences. Membership is
decided from the profile alone; tail sums and suprema beyond the stored
coefficients are always computed analytically from the profile.

Profiles bound ``|phi_n|`` by

    geometric   C * r**n                 (r = 0 denotes the zero sequence)
    power       C * (1 + n)**a
    stretched   C * r**((1 + n)**g)      0 < r < 1, 0 < g <= 1

optionally cut off to zero at ``n >= support``. Stretched-exponential profiles
are what products of two geometric sequences look like along the Cantor
enumeration of index pairs, which is why they are part of the vocabulary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import special

from .errors import (
    DimensionMismatch,
    InvalidProfile,
    NotUnitary,
    ProfileViolation,
    UndefinedPairing,
)
from .linalg import as_square

GEOMETRIC = "geometric"
POWER = "power"
STRETCHED = "stretched"
KINDS = (GEOMETRIC, POWER, STRETCHED)

SEMINORM_MAX_ORDER = 16
DEFAULT_TRUNCATION = 256
BOUND_TOL = 1e-12
CONVERGED_TOL = 1e-9
UNITARY_TOL = 1e-10
# explicit summation limit for finitely supported tails
_EXPLICIT_TAIL_LIMIT = 1 << 20
# relative safety margin on analytic tail bounds
_TAIL_SLACK = 1.0 + 1e-12


class DecayClass(str, Enum):
    TEST_SPACE = "TestSpace"
    HILBERT_ONLY = "HilbertOnly"
    DUAL_ONLY = "DualOnly"
    OUTSIDE_DUAL = "OutsideDual"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DecayProfile:
    kind: str
    rate: float
    constant: float = 1.0
    exponent: float = 1.0
    support: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidProfile(f"unknown profile kind {self.kind!r}")
        for name in ("rate", "constant", "exponent"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidProfile(f"{name} must be finite")
        if self.constant < 0:
            raise InvalidProfile("constant must be >= 0")
        if self.kind == GEOMETRIC and self.rate < 0:
            raise InvalidProfile("geometric rate must be >= 0")
        if self.kind == STRETCHED:
            if not 0 < self.rate < 1:
                raise InvalidProfile("stretched rate must lie in (0, 1)")
            if not 0 < self.exponent <= 1:
                raise InvalidProfile("stretched exponent must lie in (0, 1]")
        if self.support is not None and (int(self.support) != self.support or self.support < 0):
            raise InvalidProfile("support must be a nonnegative integer")

    @classmethod
    def geometric(cls, rate: float, constant: float = 1.0) -> "DecayProfile":
        return cls(GEOMETRIC, float(rate), float(constant))

    @classmethod
    def power(cls, exponent: float, constant: float = 1.0) -> "DecayProfile":
        """Power law ``constant * (1 + n)**exponent`` (``exponent`` stored as ``rate``)."""
        return cls(POWER, float(exponent), float(constant))

    @classmethod
    def stretched(cls, rate: float, exponent: float, constant: float = 1.0) -> "DecayProfile":
        return cls(STRETCHED, float(rate), float(constant), float(exponent))

    @classmethod
    def finite(cls, support: int, constant: float = 1.0) -> "DecayProfile":
        """Sequences vanishing at ``n >= support`` and bounded by ``constant`` before."""
        return cls(POWER, 0.0, float(constant), support=int(support))

    @property
    def is_zero(self) -> bool:
        return (
            self.constant == 0.0
            or self.support == 0
            or (self.kind == GEOMETRIC and self.rate == 0.0)
        )

    def bound(self, n) -> np.ndarray:
        """Certified bound on ``|phi_n|`` (vectorized over ``n``)."""
        n = np.asarray(n, dtype=float)
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            if self.is_zero:
                out = np.zeros_like(n)
            elif self.kind == GEOMETRIC:
                out = self.constant * np.power(self.rate, n)
            elif self.kind == POWER:
                out = self.constant * np.power(1.0 + n, self.rate)
            else:
                out = self.constant * np.power(self.rate, np.power(1.0 + n, self.exponent))
        if self.support is not None:
            out = np.where(n >= self.support, 0.0, out)
        return out


def classify(p: DecayProfile) -> DecayClass:
    """Place a profile in the triplet: test space, l2 only, dual only, or outside."""
    if p.is_zero or p.support is not None:
        return DecayClass.TEST_SPACE
    if p.kind == STRETCHED:
        return DecayClass.TEST_SPACE
    if p.kind == GEOMETRIC:
        if p.rate < 1:
            return DecayClass.TEST_SPACE
        if p.rate > 1:
            return DecayClass.OUTSIDE_DUAL
        return DecayClass.DUAL_ONLY
    # a = -1/2 is the first exponent that is not square summable
    return DecayClass.HILBERT_ONLY if p.rate < -0.5 else DecayClass.DUAL_ONLY


@dataclass(frozen=True)
class SequenceVector:
    """Stored coefficients ``phi_0 .. phi_{N-1}`` plus a profile bounding every ``phi_n``."""

    coefficients: np.ndarray
    profile: DecayProfile

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(c)):
            raise ProfileViolation("coefficients must be finite")
        b = self.profile.bound(np.arange(c.size))
        excess = np.abs(c) - b
        bad = np.nonzero(excess > BOUND_TOL * np.maximum(1.0, b))[0]
        if bad.size:
            i = int(bad[0])
            raise ProfileViolation(f"|phi_{i}| = {abs(c[i]):.6g} exceeds profile bound {b[i]:.6g}")
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)

    def __len__(self):
        return self.coefficients.size

    @classmethod
    def from_profile(cls, profile: DecayProfile, n: int = DEFAULT_TRUNCATION) -> "SequenceVector":
        """The extremal sequence ``phi_n = bound(n)`` truncated at ``n``."""
        return cls(profile.bound(np.arange(n)).astype(complex), profile)

    @property
    def decay_class(self) -> DecayClass:
        return classify(self.profile)


@dataclass(frozen=True)
class PairingResult:
    value: complex
    tail_bound: float
    converged: bool


@dataclass(frozen=True)
class TransportedVector:
    """Image ``u @ source`` of a sequence vector under a unitary.

    Topology is induced by the map: class and seminorms are those of
    ``source``.
    """

    coefficients: np.ndarray
    source: SequenceVector = field(repr=False)

    def __post_init__(self):
        self.coefficients.flags.writeable = False

    def __len__(self):
        return self.coefficients.size

    @property
    def decay_class(self) -> DecayClass:
        return self.source.decay_class

    def seminorm(self, k: int) -> float:
        return seminorm(self.source, k)


# -- seminorms ---------------------------------------------------------------


def _unimodal_sup(log_f, start: int, peak: float) -> float:
    """sup over integers n >= start of exp(log_f(n)) for log_f rising then falling at ``peak``."""
    candidates = [float(start)]
    if peak > start:
        candidates += [math.floor(peak), math.ceil(peak)]
    return math.exp(max(log_f(c) for c in candidates))


def _weighted_sup(p: DecayProfile, k: float, start: int) -> float:
    """sup_{n >= start} (1 + n)**k * bound(n); ``inf`` when unbounded."""
    if p.is_zero:
        return 0.0
    if p.support is not None:
        if start >= p.support:
            return 0.0
        if p.support - start <= _EXPLICIT_TAIL_LIMIT:
            n = np.arange(start, p.support, dtype=float)
            return float(np.max(np.power(1.0 + n, k) * p.bound(n)))
        p = DecayProfile(p.kind, p.rate, p.constant, p.exponent)
    log_c = math.log(p.constant)
    if p.kind == GEOMETRIC and p.rate < 1:
        lam = -math.log(p.rate)
        # (1+n)^k r^n peaks at 1 + n = k / lam
        return _unimodal_sup(
            lambda n: log_c + k * math.log1p(n) - lam * n, start, k / lam - 1.0
        )
    if p.kind == STRETCHED:
        lam, g = -math.log(p.rate), p.exponent
        peak = (k / (g * lam)) ** (1.0 / g) - 1.0 if k > 0 else -1.0
        return _unimodal_sup(
            lambda n: log_c + k * math.log1p(n) - lam * (1.0 + n) ** g, start, peak
        )
    if p.kind == GEOMETRIC and p.rate > 1:
        return math.inf
    a = 0.0 if p.kind == GEOMETRIC else p.rate
    if k + a > 0:
        return math.inf
    return p.constant * (1.0 + start) ** (k + a)


def profile_seminorm(p: DecayProfile, k: int) -> float:
    """Seminorm ``p_k`` of the extremal sequence of ``p`` (``inf`` when divergent)."""
    _check_order(k)
    return _weighted_sup(p, k, 0)


def _check_order(k):
    if int(k) != k or not 0 <= k <= SEMINORM_MAX_ORDER:
        raise ValueError(f"seminorm order must be an integer in [0, {SEMINORM_MAX_ORDER}]")


def seminorm(v: SequenceVector | TransportedVector, k: int) -> float:
    """``sup_n (1 + n)**k |phi_n|`` over the full (untruncated) sequence.

    The stored coefficients give the exact head; the tail beyond the
    truncation is bounded from the profile. Returns ``math.inf`` when the
    profile does not keep the supremum finite.
    """
    if isinstance(v, TransportedVector):
        return seminorm(v.source, k)
    _check_order(k)
    tail = _weighted_sup(v.profile, k, len(v))
    if math.isinf(tail):
        return math.inf
    n = np.arange(len(v), dtype=float)
    head = float(np.max(np.power(1.0 + n, k) * np.abs(v.coefficients))) if len(v) else 0.0
    return max(head, tail)


# -- pairing -----------------------------------------------------------------


def _log_form(p: DecayProfile) -> tuple[float, float, float, float]:
    """Write an infinitely supported, at most polynomially growing bound as
    ``C * (1+n)**a * r**((1+n)**g)``; returns ``(C, a, r, g)`` with ``r <= 1``."""
    if p.kind == GEOMETRIC:
        if p.rate == 1:
            return p.constant, 0.0, 1.0, 1.0
        return p.constant / p.rate, 0.0, p.rate, 1.0
    if p.kind == POWER:
        return p.constant, p.rate, 1.0, 1.0
    return p.constant, 0.0, p.rate, p.exponent


def _stretched_integral(mu: float, g: float, x0: float) -> float:
    """Integral of exp(-mu * x**g) over [x0, inf)."""
    s = 1.0 / g
    return s * mu ** (-s) * special.gamma(s) * special.gammaincc(s, mu * x0**g)


def _stretched_tail(c: float, a: float, r: float, g: float, x0: float) -> float:
    """Upper bound on sum_{x >= x0} c * x**a * r**(x**g) over integers x, r < 1."""
    lam = -math.log(r)
    if a <= 0:
        weight, mu = x0**a, lam
    else:
        # split off half the decay to absorb the polynomial factor
        mu = 0.5 * lam
        peak = (a / (g * mu)) ** (1.0 / g)
        x = max(x0, peak)
        weight = math.exp(a * math.log(x) - mu * x**g)
    if g == 1.0:
        return c * weight * math.exp(-mu * x0) / -math.expm1(-mu)
    return c * weight * (math.exp(-mu * x0**g) + _stretched_integral(mu, g, x0))


def product_tail_bound(p: DecayProfile, q: DecayProfile, start: int) -> float:
    """Upper bound on ``sum_{n >= start} bound_p(n) * bound_q(n)``.

    At least one of the profiles must be test-space class.
    """
    if p.is_zero or q.is_zero:
        return 0.0
    supports = [s.support for s in (p, q) if s.support is not None]
    if supports:
        end = min(supports)
        if end <= start:
            return 0.0
        if end - start <= _EXPLICIT_TAIL_LIMIT:
            n = np.arange(start, end, dtype=float)
            return float(np.sum(p.bound(n) * q.bound(n))) * _TAIL_SLACK
        # long finite support: fall back to the infinite-support bound below
        p = DecayProfile(p.kind, p.rate, p.constant, p.exponent)
        q = DecayProfile(q.kind, q.rate, q.constant, q.exponent)
    c1, a1, r1, g1 = _log_form(p)
    c2, a2, r2, g2 = _log_form(q)
    if r1 < 1 and r2 < 1:
        # r1^(x^g1) r2^(x^g2) <= (r1 r2)^(x^min(g)) for x >= 1
        r, g = r1 * r2, min(g1, g2)
    elif r1 < 1:
        r, g = r1, g1
    elif r2 < 1:
        r, g = r2, g2
    else:
        raise UndefinedPairing("neither profile decays faster than every power")
    return _stretched_tail(c1 * c2, a1 + a2, r, g, float(start + 1)) * _TAIL_SLACK


def pair(f: SequenceVector, v: SequenceVector) -> PairingResult:
    """Antilinear pairing ``<f, v> = sum_n conj(f_n) v_n`` of a dual element with a test vector.

    ``value`` is the truncated sum over the common stored length;
    ``tail_bound`` bounds the discarded remainder using both profiles.

    Raises
    ------
    UndefinedPairing
        If ``f`` lies outside the dual or ``v`` is not a test vector.
    """
    if classify(f.profile) is DecayClass.OUTSIDE_DUAL:
        raise UndefinedPairing("functional grows faster than every power")
    if classify(v.profile) is not DecayClass.TEST_SPACE:
        raise UndefinedPairing(f"second argument must be a test vector, got {classify(v.profile)}")
    n = min(len(f), len(v))
    value = complex(np.vdot(f.coefficients[:n], v.coefficients[:n]))
    tail = product_tail_bound(f.profile, v.profile, n)
    return PairingResult(value, tail, tail < CONVERGED_TOL)


# -- tensor products ---------------------------------------------------------


def cantor_index(m, n):
    """Cantor enumeration of index pairs: diagonal ``m + n`` first, then ``n``."""
    s = m + n
    return s * (s + 1) // 2 + n


def _sup_of(log_f, peak: float) -> float:
    return _unimodal_sup(log_f, 0, peak)


def _dominant(p: DecayProfile):
    """Coarsen a nonzero profile to one of
    ('X', r, C)     C r^n, r > 1
    ('S', r, g, C)  C r^((1+n)^g), r < 1
    ('P', a, C)     C (1+n)^a
    """
    if p.support is not None:
        n = np.arange(p.support, dtype=float)
        m = float(np.max(p.bound(n)))
        # rho^(1+n) >= 1/2 for n < support
        return ("S", 2.0 ** (-1.0 / p.support), 1.0, 2.0 * m)
    if p.kind == STRETCHED:
        return ("S", p.rate, p.exponent, p.constant)
    if p.kind == POWER:
        return ("P", p.rate, p.constant)
    if p.rate < 1:
        return ("S", p.rate, 1.0, p.constant / p.rate)
    if p.rate > 1:
        return ("X", p.rate, p.constant)
    return ("P", 0.0, p.constant)


def _tensor_dominant(x, y):
    if x[0] == "X" or y[0] == "X":
        if x[0] != "X":
            x, y = y, x
        r, c = x[1], x[2]
        if y[0] == "X":
            return DecayProfile.geometric(r * y[1], c * y[2])
        if y[0] == "S":
            return DecayProfile.geometric(r, c * y[3])
        a, cy = y[1], y[2]
        if a <= 0:
            return DecayProfile.geometric(r, c * cy)
        # (1+k)^a <= c_a 2^k
        c_a = _sup_of(lambda k: a * math.log1p(k) - k * math.log(2.0), a / math.log(2.0) - 1.0)
        return DecayProfile.geometric(2.0 * r, c * cy * c_a)

    # with s = m + n and k the Cantor index: (1+k) <= (1+s)^2 and (1+s) <= 2 (1+k)^(1/2)
    if x[0] == "S" and y[0] == "S":
        return DecayProfile.stretched(max(x[1], y[1]), 0.5 * min(x[2], y[2]), x[3] * y[3])
    if x[0] == "P" and y[0] == "P":
        a, b, c = x[1], y[1], x[2] * y[2]
        if a >= 0 and b >= 0:
            return DecayProfile.power(0.5 * (a + b), c * 2.0 ** (a + b))
        if a < 0 and b < 0:
            return DecayProfile.power(0.5 * max(a, b), c)
        e = max(a, b)
        return DecayProfile.power(0.5 * e, c * 2.0**e)
    if x[0] == "P":
        x, y = y, x
    r, g, cs = x[1], x[2], x[3]
    a, cp = y[1], y[2]
    if a >= 0:
        return DecayProfile.power(0.5 * a, cs * cp * 2.0**a)
    # (1+n)^a <= (1+s)^a (1+m)^(-a); absorb (1+m)^(-a) into the stretched factor
    lam = -math.log(r)
    peak = (-a / (g * lam)) ** (1.0 / g) - 1.0
    c_m = _sup_of(lambda m: -a * math.log1p(m) - lam * (1.0 + m) ** g, peak)
    return DecayProfile.power(0.5 * a, cs * cp * c_m)


def tensor_profile(p: DecayProfile, q: DecayProfile) -> DecayProfile:
    """Profile bounding ``|phi_m psi_n|`` at Cantor index ``cantor_index(m, n)``.

    The product of two test-space profiles is again test space (stretched
    exponential along the enumeration). Bounds are conservative: a test
    vector times an l2 vector is certified at best as l2, and often only as
    dual.
    """
    if p.is_zero or q.is_zero:
        return DecayProfile.geometric(0.0)
    if p.support is not None and q.support is not None:
        mp = float(np.max(p.bound(np.arange(p.support))))
        mq = float(np.max(q.bound(np.arange(q.support))))
        return DecayProfile.finite(cantor_index(p.support - 1, q.support - 1) + 1, mp * mq)
    return _tensor_dominant(_dominant(p), _dominant(q))


def doubled_enumeration(d: int) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i, j < d``, sorted by Cantor index."""
    pairs = [(i, j) for i in range(d) for j in range(d)]
    return sorted(pairs, key=lambda ij: cantor_index(*ij))


# -- transport of structure --------------------------------------------------


def transport(u, v: SequenceVector | TransportedVector) -> TransportedVector:
    """Carry a vector through a unitary on its truncation.

    The image inherits class and seminorms from the original vector, so
    classification commutes with transport by construction; composing
    transports accumulates the unitaries on the same source.

    Raises
    ------
    NotUnitary
        If ``u^dagger u`` deviates from the identity by more than 1e-10.
    DimensionMismatch
        If ``u`` does not act on the stored truncation length.
    """
    m = as_square(u)
    if m.shape[0] != len(v):
        raise DimensionMismatch(f"unitary of size {m.shape[0]} on a vector of length {len(v)}")
    defect = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
    if defect > UNITARY_TOL:
        raise NotUnitary(f"max |u^dagger u - I| = {defect:.3e}")
    source = v.source if isinstance(v, TransportedVector) else v
    return TransportedVector(m @ v.coefficients, source)
