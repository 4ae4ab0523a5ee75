"""Full GMRES with residual tracing, and a polynomial least-squares oracle."""

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np
import scipy.linalg

from ._validation import as_square, as_vector, check_count
from .gallery import make_rng
from .linalg import spectral_norm

BREAKDOWN_TOL = 1e-14


@dataclass(eq=False)
class GmresTrace:
    """Relative residual history ``||r_k||_2 / ||b||_2`` for ``k = 0..iterations``."""

    rel_residuals: np.ndarray
    iterations: int
    breakdown: bool
    x: np.ndarray = field(default=None, repr=False)
    basis: np.ndarray = field(default=None, repr=False)
    hessenberg: np.ndarray = field(default=None, repr=False)
    label: str = ""
    seed: int = None
    trial: int = None


def _givens(a, b):
    """``(c, s, r)`` with ``[[c, s], [-conj(s), c]] @ [a, b] = [r, 0]``, c real."""
    if b == 0:
        return 1.0, 0j, a
    if a == 0:
        return 0.0, 1 + 0j, b
    absa = abs(a)
    nrm = math.hypot(absa, abs(b))
    phase = a / absa
    return absa / nrm, phase * b.conjugate() / nrm, phase * nrm


def run(a, b, max_iter=None, rtol=1e-12, label="", a_norm=None):
    """GMRES on ``A x = b`` from ``x_0 = 0``.

    The Arnoldi basis is built by block Gram--Schmidt applied twice (the
    second pass reorthogonalizes); the least-squares problem is updated with Givens
    rotations so each residual norm is read off the rotated right-hand side.

    Parameters
    ----------
    a : (n, n) array_like
    b : (n,) array_like
        Nonzero right-hand side.
    max_iter : int, optional
        Iteration cap, default ``n``.
    rtol : float
        Stop once ``||r_k|| / ||b|| <= rtol``.
    a_norm : float, optional
        Precomputed ``||A||_2`` for the breakdown test.

    Returns
    -------
    GmresTrace
    """
    a = as_square(a, "a")
    n = a.shape[0]
    b = as_vector(b, n, "b")
    beta = float(np.linalg.norm(b))
    if beta == 0:
        raise ValueError("right-hand side b must be nonzero")
    max_iter = n if max_iter is None else check_count(max_iter, "max_iter")
    max_iter = min(max_iter, n)
    if a_norm is None:
        a_norm = spectral_norm(a)

    # basis vectors are stored as rows for contiguous access
    v = np.zeros((max_iter + 1, n), dtype=np.complex128)
    h = np.zeros((max_iter + 1, max_iter), dtype=np.complex128)
    r = np.zeros((max_iter, max_iter), dtype=np.complex128)
    cs = []
    sn = []
    g = np.zeros(max_iter + 1, dtype=np.complex128)
    g[0] = beta
    v[0] = b / beta
    res = [1.0]
    breakdown = False
    k = 0
    while k < max_iter and res[-1] > rtol:
        w = a @ v[k]
        basis = v[:k + 1]
        for _ in range(2):
            coef = basis.conj() @ w
            h[:k + 1, k] += coef
            w -= coef @ basis
        hk = float(np.linalg.norm(w))
        h[k + 1, k] = hk
        col = h[:k + 2, k].tolist()
        for i in range(k):
            c, s = cs[i], sn[i]
            col[i], col[i + 1] = (c * col[i] + s * col[i + 1],
                                  -s.conjugate() * col[i] + c * col[i + 1])
        c, s, col[k] = _givens(col[k], col[k + 1])
        cs.append(c)
        sn.append(s)
        r[:k + 1, k] = col[:k + 1]
        g[k + 1] = -s.conjugate() * g[k]
        g[k] = c * g[k]
        k += 1
        res.append(abs(g[k]) / beta)
        if hk <= BREAKDOWN_TOL * a_norm:
            breakdown = True
            break
        v[k] = w / hk
    if k:
        y = scipy.linalg.solve_triangular(r[:k, :k], g[:k], check_finite=False)
        x = y @ v[:k]
    else:
        x = np.zeros(n, dtype=np.complex128)
    return GmresTrace(rel_residuals=np.asarray(res), iterations=k,
                      breakdown=breakdown, x=x, basis=v[:k + 1].T,
                      hessenberg=h[:k + 1, :k], label=label)


def polynomial_oracle_curve(a, b, k_max, dps=60):
    """Oracle values for ``k = 0..k_max`` from a single QR factorization.

    Computed in `dps`-digit arithmetic with ``mpmath`` because the Krylov
    matrix becomes ill-conditioned long before the residual stops shrinking.
    The columns ``A b, ..., A^k b`` are each normalized before the next power
    is taken; with the full QR ``K = Q R`` the minimal residual over the first
    ``k`` columns is ``||(Q* b)[k:]||``.
    """
    a = as_square(a, "a")
    n = a.shape[0]
    b = as_vector(b, n, "b")
    k_max = check_count(k_max, "k")
    if k_max > n:
        raise ValueError(f"degree k={k_max} exceeds dimension n={n}")
    if k_max == 0:
        return np.ones(1)
    with mpmath.workdps(dps):
        am = mpmath.matrix(a.tolist())
        q = mpmath.matrix(b.tolist())
        rhs = q / mpmath.norm(q)
        q = rhs
        kry = mpmath.matrix(n, k_max)
        for j in range(k_max):
            q = am * q
            q = q / mpmath.norm(q)
            for i in range(n):
                kry[i, j] = q[i]
        qf, _ = mpmath.qr(kry, mode="full")
        coeffs = qf.H * rhs
        mags = [abs(c) ** 2 for c in coeffs]
        out = np.empty(k_max + 1)
        for k in range(k_max + 1):
            out[k] = float(mpmath.sqrt(mpmath.fsum(mags[k:])))
    return out


def polynomial_oracle(a, b, k):
    """``min ||p(A) b||_2 / ||b||_2`` over degree-``k`` polynomials with ``p(0) = 1``."""
    return float(polynomial_oracle_curve(a, b, k)[k])


def random_rhs(n, seed, trials=1):
    """Rows are standard-normal real right-hand sides drawn from one seeded stream."""
    return make_rng(seed).standard_normal((trials, n))


def trial_ensemble(a, trials, seed, max_iter=None, rtol=1e-12, label=""):
    """GMRES traces for `trials` random right-hand sides drawn from `seed`."""
    a = as_square(a, "a")
    trials = check_count(trials, "trials", 1)
    a_norm = spectral_norm(a)
    rhs = random_rhs(a.shape[0], seed, trials)
    traces = []
    for t in range(trials):
        tr = run(a, rhs[t], max_iter=max_iter, rtol=rtol, label=label,
                 a_norm=a_norm)
        tr.seed = seed
        tr.trial = t
        traces.append(tr)
    return traces
