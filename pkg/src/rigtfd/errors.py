"""Exception hierarchy.

Every domain violation raises a subclass of :class:`RigTFDError`; the class
name is the invariant that was violated, so ``type(exc).__name__`` is a stable
machine-readable tag (the CLI prints it verbatim).
"""


class RigTFDError(ValueError):
    """Base class for domain errors."""


class InvalidMatrix(RigTFDError):
    pass


class NonSquare(RigTFDError):
    pass


class NotHermitian(RigTFDError):
    pass


class NegativeEigenvalue(RigTFDError):
    pass


class DimensionMismatch(RigTFDError):
    pass


class BadLength(RigTFDError):
    pass


class NotDensityOperator(RigTFDError):
    pass


class NegativeBeta(RigTFDError):
    pass


class NonHermitianObservable(RigTFDError):
    pass


class NotNormalized(RigTFDError):
    pass


class InvalidProfile(RigTFDError):
    pass


class ProfileViolation(RigTFDError):
    """A stored coefficient exceeds the bound certified by its profile."""


class UndefinedPairing(RigTFDError):
    pass


class NotUnitary(RigTFDError):
    pass


class NotTestSpace(RigTFDError):
    pass


class NotConverged(RuntimeError):
    """Iterative eigensolver exhausted its sweep budget."""


class ComplexExpectation(RuntimeError):
    """A Hermitian expectation value came out with a non-negligible imaginary part."""
