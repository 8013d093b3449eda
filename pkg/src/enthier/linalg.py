"""Self-contained dense complex linear algebra for small matrices.

The public routines here are deliberately hand-rolled (cyclic Jacobi
eigensolver, LU determinants, combinatorial minor sums) so that the
cross-checks built on top of them follow genuinely independent code
paths. Everything targets dimensions of order ten; nothing is tuned
for large problems.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

import numpy as np

from .errors import (
    DegreeOutOfRange,
    DimensionTooLargeForMinors,
    NonHermitianInput,
    NonPositiveSpectrum,
    NonSquareMatrix,
    NonUnitaryInput,
    NoSignChange,
)

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
PSD_CLAMP_TOL = 1e-10
MINOR_DIM_LIMIT = 12

_JACOBI_SWEEP_LIMIT = 100
_JACOBI_OFFDIAG_TOL = 1e-14


def seeded_rng(seed) -> np.random.Generator:
    """Replayable random stream: one seed, one platform-independent stream.

    Accepts an integer seed or a sequence of integers for derived streams.
    """
    return np.random.default_rng(seed)


def as_complex_matrix(matrix) -> np.ndarray:
    """Coerce input to a finite 2-D complex array."""
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2:
        raise NonSquareMatrix(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return a


def require_hermitian(matrix, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = as_complex_matrix(matrix)
    if a.shape[0] != a.shape[1]:
        raise NonSquareMatrix(f"Hermitian input must be square, got {a.shape}")
    residual = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    if residual > tol:
        raise NonHermitianInput(f"symmetry residual {residual:.3e} exceeds {tol:.0e}")
    return a


def require_unitary(matrix, tol: float = UNITARY_TOL) -> np.ndarray:
    a = as_complex_matrix(matrix)
    if a.shape[0] != a.shape[1]:
        raise NonSquareMatrix(f"unitary input must be square, got {a.shape}")
    residual = np.linalg.norm(a @ a.conj().T - np.eye(a.shape[0]))
    if residual > tol:
        raise NonUnitaryInput(f"unitarity residual {residual:.3e} exceeds {tol:.0e}")
    return a


def clamp_nonnegative(values, tol: float = PSD_CLAMP_TOL) -> np.ndarray:
    """Zero out negative float noise; reject genuinely negative values."""
    v = np.array(values, dtype=float)
    if v.size and v.min() < -tol:
        raise NonPositiveSpectrum(f"eigenvalue {v.min():.3e} below -{tol:.0e}")
    v[v < 0.0] = 0.0
    return v


def _offdiag_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero a[p, q] (and a[q, p]) with a unitary plane rotation, accumulating v."""
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * np.conj(phase) * col_q
    a[:, q] = s * phase * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * np.conj(phase) * row_p + c * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0

    v_p = v[:, p].copy()
    v_q = v[:, q].copy()
    v[:, p] = c * v_p - s * np.conj(phase) * v_q
    v[:, q] = s * phase * v_p + c * v_q


def hermitian_eigensystem(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching eigenvector columns.

    Cyclic Jacobi sweeps; converged when the off-diagonal Frobenius norm
    drops to 1e-14, capped at 100 sweeps. Ties in the descending sort
    keep their original index order.
    """
    a = require_hermitian(matrix).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    for _ in range(_JACOBI_SWEEP_LIMIT):
        if _offdiag_norm(a) <= _JACOBI_OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q)
    values = np.real(np.diag(a))
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


def hermitian_eigenvalues(matrix) -> np.ndarray:
    """All real eigenvalues of a Hermitian matrix, sorted descending."""
    values, _ = hermitian_eigensystem(matrix)
    return values


def singular_values_squared(matrix) -> np.ndarray:
    """Squared singular values, descending, clamped to be nonnegative.

    Diagonalizes the smaller of the two Gram matrices, so the result has
    min(rows, cols) entries.
    """
    a = as_complex_matrix(matrix)
    rows, cols = a.shape
    gram = a @ a.conj().T if rows <= cols else a.conj().T @ a
    gram = 0.5 * (gram + gram.conj().T)
    return clamp_nonnegative(hermitian_eigenvalues(gram))


def determinant(matrix) -> complex:
    """Determinant via LU with partial pivoting; exact for 1x1 input."""
    a = as_complex_matrix(matrix)
    n, m = a.shape
    if n != m:
        raise NonSquareMatrix(f"determinant needs a square matrix, got {a.shape}")
    if n == 1:
        return complex(a[0, 0])
    a = a.copy()
    det = 1.0 + 0.0j
    for col in range(n - 1):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot_row, col] == 0:
            return 0j
        if pivot_row != col:
            a[[col, pivot_row], :] = a[[pivot_row, col], :]
            det = -det
        pivot = a[col, col]
        det *= pivot
        factors = a[col + 1 :, col] / pivot
        a[col + 1 :, col + 1 :] -= np.outer(factors, a[col, col + 1 :])
    return complex(det * a[n - 1, n - 1])


def elementary_symmetric(values, k: int) -> float:
    """Degree-k elementary symmetric polynomial of the given reals.

    Evaluated by the stable one-value-at-a-time recurrence
    e_j <- e_j + v * e_{j-1}, with e_0 = 1.
    """
    v = np.asarray(values, dtype=float)
    if v.ndim != 1:
        raise ValueError("values must be a 1-D sequence")
    n = v.size
    if not 0 <= k <= n:
        raise DegreeOutOfRange(f"degree {k} outside [0, {n}]")
    e = np.zeros(k + 1)
    e[0] = 1.0
    for value in v:
        for j in range(k, 0, -1):
            e[j] += value * e[j - 1]
    return float(e[k])


def minor_sum(matrix, k: int) -> float:
    """Sum of |det M(beta, gamma)|^2 over all k-subsets of rows and columns.

    Combinatorial cross-check path, O(C(d,k)^2 k^3); refuses matrices with
    min dimension above 12.
    """
    a = as_complex_matrix(matrix)
    rows, cols = a.shape
    d = min(rows, cols)
    if d > MINOR_DIM_LIMIT:
        raise DimensionTooLargeForMinors(f"min dimension {d} exceeds {MINOR_DIM_LIMIT}")
    if not 1 <= k <= d:
        raise DegreeOutOfRange(f"cardinality {k} outside [1, {d}]")
    column_sets = [list(gamma) for gamma in itertools.combinations(range(cols), k)]
    total = 0.0
    for beta in itertools.combinations(range(rows), k):
        row_block = a[list(beta), :]
        for gamma in column_sets:
            total += abs(determinant(row_block[:, gamma])) ** 2
    return total


def principal_minor_sum(matrix, k: int) -> float:
    """Sum of the k-by-k principal minors of a Hermitian matrix."""
    a = require_hermitian(matrix)
    d = a.shape[0]
    if d > MINOR_DIM_LIMIT:
        raise DimensionTooLargeForMinors(f"dimension {d} exceeds {MINOR_DIM_LIMIT}")
    if not 1 <= k <= d:
        raise DegreeOutOfRange(f"cardinality {k} outside [1, {d}]")
    total = 0.0
    for beta in itertools.combinations(range(d), k):
        rows = list(beta)
        total += determinant(a[rows, :][:, rows]).real
    return total


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary: QR of a complex Gaussian matrix with the
    R diagonal's phases folded back into Q."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def bisect_root(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10
) -> float:
    """Bisection on a sign-changing bracket; returns the midpoint of the
    final interval of width <= tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if not lo < hi:
        raise ValueError("need lo < hi")
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoSignChange(f"f({lo}) and f({hi}) have the same sign")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution floor
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


__all__ = [
    "HERMITIAN_TOL",
    "UNITARY_TOL",
    "PSD_CLAMP_TOL",
    "MINOR_DIM_LIMIT",
    "seeded_rng",
    "as_complex_matrix",
    "require_hermitian",
    "require_unitary",
    "clamp_nonnegative",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "singular_values_squared",
    "determinant",
    "elementary_symmetric",
    "minor_sum",
    "principal_minor_sum",
    "random_unitary",
    "bisect_root",
]
