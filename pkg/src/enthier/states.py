"""Bipartite pure states as unit-norm complex amplitude matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateEntry,
    IndexOutOfRange,
    NegativeCoefficient,
    NotNormalized,
    ZeroState,
)
from .linalg import clamp_nonnegative, require_unitary, singular_values_squared

NORM_INVARIANT_TOL = 1e-9
NORM_GATE = 1e-6  # constructor acceptance without an explicit renormalize
RANK_TOL = 1e-10

# Below this deviation, dividing by the norm is pure rounding noise and
# would break bit-exact round trips through state files.
_RENORM_SKIP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    """A bipartite pure state, stored as its amplitude matrix.

    Row index addresses the first subsystem, column index the second, so
    entry (i, j) is the amplitude on the product basis vector |ij>. The
    matrix must have unit Frobenius norm; instances are immutable.
    """

    amplitudes: np.ndarray
    _spectrum: np.ndarray | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=complex)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise DimensionMismatch(f"amplitude matrix must be 2-D, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("amplitudes contain non-finite entries")
        norm = float(np.linalg.norm(a))
        if abs(norm - 1.0) > NORM_INVARIANT_TOL:
            raise NotNormalized(f"Frobenius norm {norm!r} deviates from 1 beyond 1e-9")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def dim_a(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def dim_b(self) -> int:
        return self.amplitudes.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PureState):
            return NotImplemented
        return self.amplitudes.shape == other.amplitudes.shape and bool(
            np.array_equal(self.amplitudes, other.amplitudes)
        )

    __hash__ = object.__hash__


def from_amplitudes(dim_a: int, dim_b: int, entries, renormalize: bool = False) -> PureState:
    """Assemble a state from sparse (i, j, amplitude) triples.

    The result is normalized to unit norm (up to rounding); without
    ``renormalize`` the input norm may deviate from 1 by at most 1e-6.
    """
    if dim_a < 1 or dim_b < 1:
        raise DimensionMismatch(f"dimensions must be positive, got {dim_a}x{dim_b}")
    a = np.zeros((dim_a, dim_b), dtype=complex)
    seen: set[tuple[int, int]] = set()
    for i, j, value in entries:
        if not (0 <= i < dim_a and 0 <= j < dim_b):
            raise IndexOutOfRange(f"index ({i}, {j}) outside {dim_a}x{dim_b}")
        if (i, j) in seen:
            raise DuplicateEntry(f"amplitude ({i}, {j}) supplied twice")
        seen.add((i, j))
        a[i, j] = value
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        raise ZeroState("all amplitudes are zero")
    if not renormalize and abs(norm - 1.0) > NORM_GATE:
        raise NotNormalized(f"norm {norm!r} deviates from 1 beyond 1e-6; pass renormalize")
    if abs(norm - 1.0) > _RENORM_SKIP_TOL:
        a = a / norm
    return PureState(a)


def from_schmidt(coefficients, renormalize: bool = False) -> PureState:
    """Diagonal state sum_i c_i |ii> from nonnegative Schmidt coefficients."""
    c = np.asarray(coefficients, dtype=float)
    if c.ndim != 1 or c.size < 1:
        raise DimensionMismatch("coefficients must be a non-empty 1-D sequence")
    if np.any(c < 0.0):
        raise NegativeCoefficient(f"coefficient {c.min()!r} is negative")
    norm = float(np.linalg.norm(c))
    if norm == 0.0:
        raise ZeroState("all coefficients are zero")
    if not renormalize and abs(norm - 1.0) > NORM_GATE:
        raise NotNormalized(f"norm {norm!r} deviates from 1 beyond 1e-6; pass renormalize")
    if abs(norm - 1.0) > _RENORM_SKIP_TOL:
        c = c / norm
    a = np.zeros((c.size, c.size), dtype=complex)
    np.fill_diagonal(a, c.astype(complex))
    return PureState(a)


def schmidt_spectrum(state: PureState) -> np.ndarray:
    """Descending eigenvalues of the reduced density matrix, renormalized
    to unit sum. Length is min(dim_a, dim_b)."""
    cached = state._spectrum
    if cached is not None:
        return cached
    values = clamp_nonnegative(singular_values_squared(state.amplitudes))
    total = float(values.sum())
    if abs(total - 1.0) > 1e-6:
        raise RuntimeError(f"spectrum sum {total!r} drifted from 1; state corrupt")
    values = values / total
    values.setflags(write=False)
    object.__setattr__(state, "_spectrum", values)
    return values


def schmidt_rank(spectrum, tol: float = RANK_TOL) -> int:
    """Number of Schmidt coefficients above tolerance."""
    return int(np.sum(np.asarray(spectrum, dtype=float) > tol))


def apply_local_unitary(state: PureState, u, v) -> PureState:
    """Act with U (x) V: the amplitude matrix maps to U^T A V."""
    uu = require_unitary(u)
    vv = require_unitary(v)
    if uu.shape[0] != state.dim_a or vv.shape[0] != state.dim_b:
        raise DimensionMismatch(
            f"unitaries {uu.shape[0]}/{vv.shape[0]} do not match state {state.dim_a}x{state.dim_b}"
        )
    return PureState(uu.T @ state.amplitudes @ vv)


def random_pure(dim_a: int, dim_b: int, rng: np.random.Generator) -> PureState:
    """Haar-induced random state: normalized complex Gaussian amplitudes."""
    if dim_a < 1 or dim_b < 1:
        raise DimensionMismatch(f"dimensions must be positive, got {dim_a}x{dim_b}")
    z = rng.standard_normal((dim_a, dim_b)) + 1j * rng.standard_normal((dim_a, dim_b))
    return PureState(z / np.linalg.norm(z))


def density_matrix(state: PureState) -> np.ndarray:
    """Projector |state><state| in the product basis (row-major |ij>)."""
    vec = state.amplitudes.reshape(-1)
    return np.outer(vec, vec.conj())


__all__ = [
    "NORM_INVARIANT_TOL",
    "NORM_GATE",
    "RANK_TOL",
    "PureState",
    "from_amplitudes",
    "from_schmidt",
    "schmidt_spectrum",
    "schmidt_rank",
    "apply_local_unitary",
    "random_pure",
    "density_matrix",
]
