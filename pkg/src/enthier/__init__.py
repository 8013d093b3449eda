"""Concurrence hierarchies, Schmidt spectra, and LOCC convertibility for
bipartite pure quantum states, plus the Wootters concurrence machinery
for two-qubit mixed states."""

__version__ = "0.1.0"

from .errors import (
    ConcurrenceOutOfRange,
    DegreeOutOfRange,
    DimensionMismatch,
    DimensionTooLargeForMinors,
    DuplicateEntry,
    EnthierError,
    IndexOutOfRange,
    InvalidDensity,
    NegativeCoefficient,
    NonHermitianInput,
    NonPositiveOrder,
    NonPositiveSpectrum,
    NonSquareMatrix,
    NonUnitaryInput,
    NoSignChange,
    NotNormalized,
    ParseError,
    SelfCheckFailed,
    ZeroState,
)
from .linalg import (
    bisect_root,
    determinant,
    elementary_symmetric,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    minor_sum,
    principal_minor_sum,
    random_unitary,
    seeded_rng,
    singular_values_squared,
)
from .locc import (
    ConvertibilityVerdict,
    DominanceReport,
    Verdict,
    conversion_class,
    hierarchy_dominance,
    majorizes,
    nielsen_verdict,
    t_transform_source,
)
from .measures import (
    SPIN_FLIP,
    Separability,
    af_concurrence,
    binary_entropy,
    eof_from_concurrence,
    eof_pure,
    hierarchy,
    hierarchy_via_invariants,
    hierarchy_via_minors,
    invariants,
    ppt_check,
    renyi_entropy,
    rungta_concurrence,
    spin_flip_lambdas,
    wootters_concurrence,
    wootters_pure,
)
from .statefile import parse_density, parse_state, state_document, write_state
from .states import (
    PureState,
    apply_local_unitary,
    density_matrix,
    from_amplitudes,
    from_schmidt,
    random_pure,
    schmidt_rank,
    schmidt_spectrum,
)
