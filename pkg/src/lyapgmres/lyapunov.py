"""Dense Lyapunov solver ``A* G + G A = C`` and Lyapunov inverse iteration."""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._validation import as_square, check_count, check_same_size, hermitian_part
from .exceptions import HalfPlaneError, NotPositiveDefiniteError
from .gram import CHOLESKY, EIGEN_SQRT, GramInnerProduct
from .linalg import schur, spectral_norm

# Relative eigenvalue floor used when G is only numerically positive definite.
CLIP = np.finfo(float).eps
# Below this (relative) most negative eigenvalue G is rejected outright.
INDEFINITE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class LyapunovSolution:
    """Hermitian solution ``g`` with its relative residual and the shift used."""

    g: np.ndarray
    residual: float
    shift: float = 0.0
    warnings: tuple = ()


@dataclass(frozen=True, eq=False)
class IterationFamily:
    """Inner products ``G_1, ..., G_M`` from (shifted) Lyapunov inverse iteration."""

    members: list
    shift: float
    c0: str

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, m):
        """Member ``m`` (1-based, matching the iteration index)."""
        for k, ip in self.members:
            if k == m:
                return ip
        raise KeyError(m)


def lyap_operator_apply(a, x):
    """Apply the Lyapunov operator ``L(X) = A* X + X A``."""
    a = as_square(a, "a")
    x = as_square(x, "x")
    check_same_size(a, x, ("A", "X"))
    return a.conj().T @ x + x @ a


def _check_half_plane(eigs, shift):
    k = int(np.argmin(eigs.real))
    if not eigs[k].real > shift:
        lam = complex(eigs[k])
        if shift:
            raise HalfPlaneError(lam, f"shift {shift:g} too large: eigenvalue "
                                      f"{lam:.6g} has real part <= shift")
        raise HalfPlaneError(lam)


def _bartels_stewart_forward(t, f):
    """Solve ``T* Y + Y T = F`` for upper-triangular ``T``, columns left to right."""
    n = t.shape[0]
    y = np.zeros_like(f)
    tc = t.conj().T
    idx = np.diag_indices(n)
    for j in range(n):
        rhs = f[:, j] - y[:, :j] @ t[:j, j]
        m = tc.copy()
        m[idx] += t[j, j]
        # m is lower triangular
        y[:, j] = _solve_lower(m, rhs)
    return y


def _bartels_stewart_backward(t, f):
    """Solve ``T Y + Y T* = F`` for upper-triangular ``T``, columns right to left."""
    n = t.shape[0]
    y = np.zeros_like(f)
    idx = np.diag_indices(n)
    for j in range(n - 1, -1, -1):
        rhs = f[:, j] - y[:, j + 1:] @ t[j, j + 1:].conj()
        m = t.copy()
        m[idx] += np.conj(t[j, j])
        y[:, j] = _solve_upper(m, rhs)
    return y


def _solve_lower(m, b):
    return scipy.linalg.solve_triangular(m, b, lower=True, check_finite=False)


def _solve_upper(m, b):
    return scipy.linalg.solve_triangular(m, b, lower=False, check_finite=False)


def _solve_schur(dec, c, order):
    q = dec.q
    f = q.conj().T @ c @ q
    if order == "forward":
        y = _bartels_stewart_forward(dec.t, f)
    else:
        y = _bartels_stewart_backward(dec.t, f)
    return q @ y @ q.conj().T


def solve(a, c, order="forward", shift=0.0, _schur=None):
    """Solve ``(A - sI)* G + G (A - sI) = C`` by the Bartels--Stewart method.

    Parameters
    ----------
    a : (n, n) array_like
        Coefficient matrix; every eigenvalue must have real part above `shift`.
    c : (n, n) array_like
        Hermitian right-hand side (symmetrized on entry).
    order : {'forward', 'backward'}
        ``'forward'`` uses the Schur form of ``A`` and sweeps columns left to
        right; ``'backward'`` uses the Schur form of ``A*`` and sweeps right
        to left.  Both solve the same equation.
    shift : float
        Shift ``s >= 0``.

    Returns
    -------
    LyapunovSolution
        ``g`` is Hermitian (explicitly symmetrized).  Definiteness is checked
        when it is wrapped by :func:`gram_from_solution`.

    Raises
    ------
    HalfPlaneError
        If an eigenvalue has real part ``<= shift``.
    """
    a = as_square(a, "a")
    c = hermitian_part(as_square(c, "c"))
    check_same_size(a, c, ("A", "C"))
    if shift < 0:
        raise ValueError(f"shift must be >= 0, got {shift}")
    n = a.shape[0]
    eye = np.eye(n)
    a_s = a - shift * eye
    if order == "forward":
        dec = _schur if _schur is not None else schur(a)
        eigs = np.diag(dec.t)
        dec_s = type(dec)(q=dec.q, t=dec.t - shift * eye)
    elif order == "backward":
        dec = schur(a.conj().T)
        eigs = np.diag(dec.t).conj()
        dec_s = type(dec)(q=dec.q, t=dec.t - shift * eye)
    else:
        raise ValueError(f"order must be 'forward' or 'backward', got {order!r}")
    _check_half_plane(eigs, shift)
    g = hermitian_part(_solve_schur(dec_s, c, order))
    res = spectral_norm(a_s.conj().T @ g + g @ a_s - c)
    cnorm = spectral_norm(c)
    residual = res / cnorm if cnorm > 0 else res
    return LyapunovSolution(g=g, residual=float(residual), shift=float(shift))


def gram_from_solution(sol):
    """Wrap a Lyapunov solution as an inner product, enforcing definiteness.

    Cholesky is tried first.  If it fails but the most negative eigenvalue is
    within roundoff of zero (relative ``INDEFINITE_TOL``), the eigen square
    root is used with eigenvalues clipped to ``eps * lambda_max``.
    """
    try:
        ip = GramInnerProduct.from_matrix(sol.g, factor=CHOLESKY)
    except NotPositiveDefiniteError:
        w = np.linalg.eigvalsh(sol.g)
        if w[-1] <= 0 or w[0] < -INDEFINITE_TOL * w[-1]:
            raise NotPositiveDefiniteError(
                int(np.argmin(w)), float(w[0]),
                f"computed G is not positive definite: eigenvalues span "
                f"[{w[0]:.3e}, {w[-1]:.3e}]")
        ip = GramInnerProduct.from_matrix(sol.g, factor=EIGEN_SQRT, clip=CLIP)
    return ip


def solve_gram(a, c, shift=0.0):
    """Solve the Lyapunov equation and return ``(solution, inner_product)``."""
    sol = solve(a, c, shift=shift)
    ip = gram_from_solution(sol)
    return sol, ip


def inverse_iteration(a, g0, steps, shift=0.0, c0="given"):
    """Lyapunov (shifted) inverse iteration.

    Solves ``(A - sI)* G_m + G_m (A - sI) = G_{m-1}`` for ``m = 1..steps``
    starting from ``G_0 = g0``.  The Schur form of ``A`` is computed once and
    reused for every step.

    Returns
    -------
    IterationFamily
        Members are ``(m, GramInnerProduct)`` pairs; ``steps == 0`` gives an
        empty family.
    """
    a = as_square(a, "a")
    steps = check_count(steps, "steps")
    g_prev = hermitian_part(as_square(g0, "g0"))
    check_same_size(a, g_prev, ("A", "G0"))
    if shift < 0:
        raise ValueError(f"shift must be >= 0, got {shift}")
    members = []
    if steps == 0:
        return IterationFamily(members=members, shift=float(shift), c0=c0)
    dec = schur(a)
    _check_half_plane(np.diag(dec.t), shift)
    for m in range(1, steps + 1):
        sol = solve(a, g_prev, shift=shift, _schur=dec)
        members.append((m, gram_from_solution(sol)))
        g_prev = sol.g
    return IterationFamily(members=members, shift=float(shift), c0=c0)
