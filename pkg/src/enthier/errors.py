"""Exception types raised across the package."""


class EnthierError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareMatrix(EnthierError):
    """A square matrix was required."""


class NonHermitianInput(EnthierError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NonUnitaryInput(EnthierError):
    """Matrix fails the U U^dag = I check beyond tolerance."""


class NonPositiveSpectrum(EnthierError):
    """A positive-semidefinite construction produced a genuinely negative eigenvalue."""


class DegreeOutOfRange(EnthierError):
    """Polynomial degree or minor cardinality outside the valid range."""


class DimensionTooLargeForMinors(EnthierError):
    """Minor enumeration is guarded against combinatorial blowup."""


class NoSignChange(EnthierError):
    """Bisection bracket does not straddle a root."""


class DimensionMismatch(EnthierError):
    """Operands have incompatible dimensions."""


class IndexOutOfRange(EnthierError):
    """Amplitude index outside the declared dimensions."""


class ZeroState(EnthierError):
    """All amplitudes vanish; no state can be normalized."""


class NotNormalized(EnthierError):
    """Norm deviates too far from 1 and renormalization was not requested."""


class DuplicateEntry(EnthierError):
    """The same amplitude index was supplied twice."""


class NegativeCoefficient(EnthierError):
    """Schmidt coefficients must be nonnegative."""


class InvalidDensity(EnthierError):
    """Not a valid density matrix (shape, hermiticity, trace, or positivity)."""


class NonPositiveOrder(EnthierError):
    """Renyi order must be positive."""


class ConcurrenceOutOfRange(EnthierError):
    """Concurrence argument outside [0, 1]."""


class ParseError(EnthierError):
    """State or density document is structurally malformed."""


class SelfCheckFailed(EnthierError):
    """A built-in reference check missed its tolerance."""
