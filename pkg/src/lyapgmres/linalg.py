"""Dense complex matrix kernels.

Everything here works on complex128 ``numpy`` arrays.  The heavy lifting
(Hermitian eigenproblems and the complex Schur form) is delegated to LAPACK via
``numpy``/``scipy``; the wrappers fix eigenvalue ordering and error
reporting so the rest of the package can rely on them.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._validation import as_matrix, as_square, hermitian_part
from .exceptions import ConvergenceError, NotPositiveDefiniteError

TOL_SYM = 1e-12
TOL_EIG = 1e-11
TOL_SCHUR = 1e-11


@dataclass(frozen=True)
class HermitianEigen:
    """Eigendecomposition ``H = V diag(values) V*`` with ascending values."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def min(self):
        return float(self.values[0])

    @property
    def max(self):
        return float(self.values[-1])


@dataclass(frozen=True)
class SchurDecomposition:
    """Complex Schur form ``A = Q T Q*`` with ``T`` upper triangular."""

    q: np.ndarray
    t: np.ndarray

    @property
    def eigenvalues(self):
        return np.diag(self.t).copy()


def spectral_norm(x):
    """Largest singular value of `x` (0 for an empty or zero matrix)."""
    x = as_matrix(x)
    if x.size == 0:
        return 0.0
    return float(np.linalg.norm(x, 2))


def hermitian_eigen(h, tol_sym=TOL_SYM):
    """Eigenvalues (ascending) and orthonormal eigenvectors of Hermitian `h`.

    The input is symmetrized as ``(h + h*)/2`` before the solve; an asymmetry
    larger than ``tol_sym * ||h||_2`` is rejected.
    """
    h = as_square(h, "h")
    n = h.shape[0]
    if n == 0:
        return HermitianEigen(np.zeros(0), np.zeros((0, 0), complex))
    scale = spectral_norm(h)
    skew = np.abs(h - h.conj().T).max()
    if skew > tol_sym * max(scale, np.finfo(float).tiny) and skew > 0:
        raise ValueError(f"matrix is not Hermitian: max |h - h*| = {skew:.3e} "
                         f"exceeds {tol_sym:g} * ||h||_2")
    hs = hermitian_part(h)
    try:
        values, vectors = np.linalg.eigh(hs)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(
            f"Hermitian eigensolver failed for n={n}: {exc}") from exc
    return HermitianEigen(values, vectors)


def hermitian_eigvals(h):
    """Ascending eigenvalues of the Hermitian part of `h` (no symmetry check)."""
    h = as_square(h, "h")
    try:
        return np.linalg.eigvalsh(hermitian_part(h))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(
            f"Hermitian eigensolver failed for n={h.shape[0]}: {exc}") from exc


def schur(a):
    """Complex Schur decomposition of a square matrix."""
    a = as_square(a, "a")
    try:
        t, q = scipy.linalg.schur(a, output="complex")
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(
            f"QR iteration failed to deflate for n={a.shape[0]}: {exc}") from exc
    t = np.triu(t)
    return SchurDecomposition(q=q, t=t)


def cholesky(g):
    """Upper-triangular ``R`` with ``R* R = g``.

    Right-looking outer-product factorization so a failing pivot can be
    reported with its position and value.

    Raises
    ------
    NotPositiveDefiniteError
        If a pivot is not strictly positive.
    """
    a = hermitian_part(as_square(g, "g")).copy()
    n = a.shape[0]
    r = np.zeros_like(a)
    for j in range(n):
        pivot = a[j, j].real
        if not pivot > 0.0:
            raise NotPositiveDefiniteError(j, float(pivot))
        rjj = np.sqrt(pivot)
        r[j, j] = rjj
        row = a[j, j + 1:] / rjj
        r[j, j + 1:] = row
        a[j + 1:, j + 1:] -= np.outer(row.conj(), row)
    return r


def solve_triangular(t, b, lower=False, side="left", trans="N"):
    """Solve ``op(T) X = B`` (``side='left'``) or ``X op(T) = B`` (``'right'``).

    `trans` is ``'N'``, ``'T'`` or ``'C'``.  A zero (or sub-roundoff) diagonal
    entry raises ``np.linalg.LinAlgError``.
    """
    t = as_square(t, "t")
    b = np.asarray(b, dtype=np.complex128)
    diag = np.abs(np.diag(t))
    if diag.size and diag.min() <= np.finfo(float).eps * diag.max() * t.shape[0]:
        k = int(np.argmin(diag))
        raise np.linalg.LinAlgError(
            f"triangular matrix is singular: |t[{k},{k}]| = {diag[k]:.3e}")
    if side == "left":
        return scipy.linalg.solve_triangular(t, b, lower=lower, trans=trans,
                                             check_finite=False)
    if side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if trans == "T":
        # X T^T = B  <=>  T X^T = B^T
        return scipy.linalg.solve_triangular(
            t, b.T, lower=lower, trans="N", check_finite=False).T
    # X op(T) = B  <=>  op(T)^H X^H = B^H
    flip = {"N": "C", "C": "N"}[trans]
    return scipy.linalg.solve_triangular(
        t, b.conj().T, lower=lower, trans=flip, check_finite=False).conj().T


def principal_sqrt(a, tol=1e-12):
    """Principal square root via the Schur form and a triangular recurrence.

    Eigenvalues on the closed negative real axis (within ``tol * ||a||_2``)
    are rejected since the principal branch is undefined there.
    """
    a = as_square(a, "a")
    n = a.shape[0]
    if n == 0:
        return a.copy()
    scale = max(spectral_norm(a), np.finfo(float).tiny)
    dec = schur(a)
    t = dec.t
    lam = np.diag(t)
    bad = (np.abs(lam.imag) <= tol * scale) & (lam.real <= tol * scale)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise ValueError(f"eigenvalue {lam[k]:.6g} lies on the closed negative "
                         f"real axis; principal square root undefined")
    u = np.zeros_like(t)
    d = np.sqrt(lam)
    u[np.diag_indices(n)] = d
    for j in range(1, n):
        for i in range(j - 1, -1, -1):
            s = t[i, j] - u[i, i + 1:j] @ u[i + 1:j, j]
            u[i, j] = s / (d[i] + d[j])
    return dec.q @ u @ dec.q.conj().T
