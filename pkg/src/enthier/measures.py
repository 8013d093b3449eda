"""Entanglement measures for bipartite pure states and two-qubit densities.

The concurrence hierarchy C_1..C_d (elementary symmetric polynomials of
the Schmidt spectrum) is computed along three independent routes: from
the spectrum itself, from squared minor sums of the amplitude matrix
(Cauchy-Binet), and from power-sum invariants through Newton's
identities. The routes exist to cross-check each other.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .errors import (
    ConcurrenceOutOfRange,
    DimensionMismatch,
    DimensionTooLargeForMinors,
    InvalidDensity,
    NonPositiveOrder,
)
from .linalg import (
    MINOR_DIM_LIMIT,
    clamp_nonnegative,
    determinant,
    elementary_symmetric,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    minor_sum,
)
from .states import PureState, schmidt_spectrum

DENSITY_TRACE_TOL = 1e-9
DENSITY_HERMITIAN_TOL = 1e-12
DENSITY_POSITIVITY_TOL = 1e-10
PPT_TOL = 1e-10

# Eigenvalues of sqrt(rho) rho~ sqrt(rho) below this are matrix-product
# dust (order machine-eps for trace-1 inputs); their square roots would
# otherwise pollute the concurrence at the 1e-8 scale.
_LAMBDA_SQ_FLOOR = 1e-13

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])

#: The two-qubit spin-flip conjugation matrix sigma_y (x) sigma_y.
SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y).real
SPIN_FLIP.setflags(write=False)


class Separability(Enum):
    SEPARABLE = "separable"
    ENTANGLED = "entangled"


def hierarchy(state: PureState) -> np.ndarray:
    """C_k = e_k(schmidt spectrum) for k = 1..d, d = min(dim_a, dim_b)."""
    lam = schmidt_spectrum(state)
    return np.array([elementary_symmetric(lam, k) for k in range(1, lam.size + 1)])


def hierarchy_via_minors(state: PureState) -> np.ndarray:
    """The hierarchy as squared minor sums of the amplitude matrix.

    C_k = sum over k-subsets beta, gamma of |det A(beta, gamma)|^2, which
    agrees with the spectral route by the Cauchy-Binet formula.
    """
    a = state.amplitudes
    d = min(a.shape)
    if d > MINOR_DIM_LIMIT:
        raise DimensionTooLargeForMinors(f"min dimension {d} exceeds {MINOR_DIM_LIMIT}")
    return np.array([minor_sum(a, k) for k in range(1, d + 1)])


def invariants(state: PureState) -> np.ndarray:
    """Local-unitary invariants I_k = sum_i lambda_i^(k+1), k = 0..d-1."""
    lam = schmidt_spectrum(state)
    return np.array([float(np.sum(lam ** (k + 1))) for k in range(lam.size)])


def hierarchy_via_invariants(state: PureState) -> np.ndarray:
    """The hierarchy reconstructed from power sums via Newton's identities.

    With p_m = sum_i lambda_i^m the recursion is
    k e_k = sum_{m=1}^{k} (-1)^(m-1) e_{k-m} p_m; the three-level case
    reduces to C_3 = (1 - 3 p_2 + 2 p_3) / 6.
    """
    power_sums = invariants(state)  # p_m = power_sums[m - 1]
    d = power_sums.size
    e = np.zeros(d + 1)
    e[0] = 1.0
    for k in range(1, d + 1):
        acc = 0.0
        for m in range(1, k + 1):
            acc += (-1.0) ** (m - 1) * e[k - m] * power_sums[m - 1]
        e[k] = acc / k
    return e[1:]


def renyi_entropy(state: PureState, order: float) -> float:
    """Renyi entropy of the reduced state, base-2 logarithms.

    Order 1 is the von Neumann limit -sum lambda log2 lambda.
    """
    if order <= 0:
        raise NonPositiveOrder(f"order must be positive, got {order}")
    lam = schmidt_spectrum(state)
    lam = lam[lam > 0.0]
    if order == 1:
        return float(-np.sum(lam * np.log2(lam)))
    return float(np.log2(np.sum(lam**order)) / (1.0 - order))


def eof_pure(state: PureState) -> float:
    """Entanglement of formation of a pure state, in bits: the von
    Neumann entropy of the reduced density matrix."""
    return renyi_entropy(state, 1)


def af_concurrence(state: PureState) -> float:
    """Generalized two-level concurrence sqrt(d/(d-1) (1 - purity)),
    normalized to hit 1 on maximally entangled states."""
    lam = schmidt_spectrum(state)
    d = lam.size
    if d == 1:
        return 0.0
    purity = float(np.sum(lam**2))
    return math.sqrt(max(0.0, d / (d - 1) * (1.0 - purity)))


def rungta_concurrence(state: PureState) -> float:
    """Universal-inverter concurrence sqrt(2 (1 - purity))."""
    lam = schmidt_spectrum(state)
    purity = float(np.sum(lam**2))
    return math.sqrt(max(0.0, 2.0 * (1.0 - purity)))


def require_two_qubit_density(rho) -> np.ndarray:
    """Validate a 4x4 density matrix: Hermitian, unit trace, positive."""
    a = np.asarray(rho, dtype=complex)
    if a.shape != (4, 4):
        raise InvalidDensity(f"expected a 4x4 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidDensity("density contains non-finite entries")
    if np.max(np.abs(a - a.conj().T)) > DENSITY_HERMITIAN_TOL:
        raise InvalidDensity("density is not Hermitian within 1e-12")
    trace = complex(np.trace(a)).real
    if abs(trace - 1.0) > DENSITY_TRACE_TOL:
        raise InvalidDensity(f"trace {trace!r} deviates from 1 beyond 1e-9")
    smallest = hermitian_eigenvalues(a)[-1]
    if smallest < -DENSITY_POSITIVITY_TOL:
        raise InvalidDensity(f"negative eigenvalue {smallest:.3e}")
    return a


def _psd_sqrt(matrix) -> np.ndarray:
    values, vectors = hermitian_eigensystem(matrix)
    roots = np.sqrt(clamp_nonnegative(values))
    return (vectors * roots) @ vectors.conj().T


def spin_flip_lambdas(rho) -> np.ndarray:
    """Descending square roots of the eigenvalues of rho rho~, where rho~
    is the spin-flipped conjugate of rho.

    Computed from the Hermitian product sqrt(rho) rho~ sqrt(rho), which
    shares the spectrum of rho rho~.
    """
    a = require_two_qubit_density(rho)
    flipped = SPIN_FLIP @ a.conj() @ SPIN_FLIP
    root = _psd_sqrt(a)
    product = root @ flipped @ root
    product = 0.5 * (product + product.conj().T)
    squares = clamp_nonnegative(hermitian_eigenvalues(product))
    squares[squares < _LAMBDA_SQ_FLOOR] = 0.0
    return np.sqrt(squares)


def wootters_concurrence(rho) -> float:
    """Two-qubit mixed-state concurrence max{0, l1 - l2 - l3 - l4}."""
    lam = spin_flip_lambdas(rho)
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def wootters_pure(state: PureState) -> float:
    """Two-qubit pure-state concurrence 2 |det A|."""
    if (state.dim_a, state.dim_b) != (2, 2):
        raise DimensionMismatch(f"need a 2x2 state, got {state.dim_a}x{state.dim_b}")
    return 2.0 * abs(determinant(state.amplitudes))


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation of a two-qubit state from its
    concurrence: h((1 + sqrt(1 - C^2)) / 2), in bits."""
    if not 0.0 <= c <= 1.0:
        raise ConcurrenceOutOfRange(f"concurrence {c!r} outside [0, 1]")
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def partial_transpose_b(rho) -> np.ndarray:
    """Partial transpose of a two-qubit density over the second qubit."""
    a = np.asarray(rho, dtype=complex)
    return a.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def ppt_check(rho) -> Separability:
    """Peres-Horodecki test; necessary and sufficient for two qubits."""
    a = require_two_qubit_density(rho)
    smallest = hermitian_eigenvalues(partial_transpose_b(a))[-1]
    return Separability.ENTANGLED if smallest < -PPT_TOL else Separability.SEPARABLE


__all__ = [
    "SPIN_FLIP",
    "Separability",
    "hierarchy",
    "hierarchy_via_minors",
    "hierarchy_via_invariants",
    "invariants",
    "renyi_entropy",
    "eof_pure",
    "af_concurrence",
    "rungta_concurrence",
    "require_two_qubit_density",
    "spin_flip_lambdas",
    "wootters_concurrence",
    "wootters_pure",
    "binary_entropy",
    "eof_from_concurrence",
    "partial_transpose_b",
    "ppt_check",
]
