"""Test matrices, some with an application-supplied Lyapunov pair ``(G, C)``.

Random data comes from ``numpy.random.Generator(PCG64(seed))`` drawing
standard-normal entries, so a given seed reproduces the same matrices.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import check_count
from .linalg import cholesky, hermitian_eigen, solve_triangular, spectral_norm

RNG_ALGORITHM = "numpy.random.PCG64/standard_normal"


def make_rng(seed):
    """The package-wide generator for a seed."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(eq=False)
class GalleryProblem:
    """A system matrix with optional explicit ``G`` and ``C``.

    ``half_plane`` records where the spectrum lives.  For ``'right'`` the pair
    satisfies ``A* G + G A = C``; for ``'left'`` it satisfies
    ``A* G + G A = -C`` (so ``-A`` has the right-half-plane pair ``(G, C)``).
    """

    a: np.ndarray
    label: str
    g_explicit: np.ndarray = None
    c_explicit: np.ndarray = None
    half_plane: str = "right"
    parameters: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.a.shape[0]

    def lyapunov_residual(self):
        """Relative residual of the explicit pair, or ``None`` if absent."""
        if self.g_explicit is None or self.c_explicit is None:
            return None
        a, g, c = self.a, self.g_explicit, self.c_explicit
        sign = 1.0 if self.half_plane == "right" else -1.0
        lhs = a.conj().T @ g + g @ a
        return spectral_norm(lhs - sign * c) / spectral_norm(c)


def jordan_matrix(n, alpha):
    """Unit-diagonal bidiagonal matrix with constant superdiagonal `alpha`."""
    n = check_count(n, "n", 1)
    a = np.eye(n, dtype=np.complex128)
    a[np.arange(n - 1), np.arange(1, n)] = alpha
    return a


def integration_matrix(n, gamma):
    """Unit-diagonal bidiagonal matrix with superdiagonal ``gamma / j``."""
    n = check_count(n, "n", 1)
    a = np.eye(n, dtype=np.complex128)
    a[np.arange(n - 1), np.arange(1, n)] = gamma / np.arange(1, n)
    return a


def _tridiag(n, lo, mid, hi):
    return (np.diag(np.full(n, mid)) + np.diag(np.full(n - 1, hi), 1)
            + np.diag(np.full(n - 1, lo), -1))


def string_mass_stiffness(big_n):
    """Linear finite-element mass and stiffness matrices of a unit string."""
    h = 1.0 / (big_n + 1)
    m = _tridiag(big_n, h / 6, 2 * h / 3, h / 6)
    k = _tridiag(big_n, -1 / h, 2 / h, -1 / h)
    return m, k


def optimal_damping(m, k):
    """``sqrt(lambda_min(M^{-1} K))`` via Cholesky of ``M`` and a Hermitian solve."""
    r = cholesky(m)                                 # M = R* R
    x = solve_triangular(r, k, trans="C")           # R^{-*} K
    x = solve_triangular(r, x.conj().T, trans="C")  # R^{-*} K R^{-1}
    return float(np.sqrt(hermitian_eigen(0.5 * (x + x.conj().T)).min))


def damped_string(big_n):
    """Optimally damped string in first-order form, ``n = 2 * big_n``.

    ``A = [[0, I], [-M^{-1}K, -2aI]]`` with damping ``D = 2aM`` and ``a``
    chosen to minimize the spectral abscissa, which makes ``-a`` a defective
    double eigenvalue.  The explicit ``G`` solves ``A* G + G A = -C`` with
    ``C = blkdiag(K, M)``; the spectrum is in the left half-plane.
    """
    big_n = check_count(big_n, "big_n", 2)
    m, k = string_mass_stiffness(big_n)
    a_opt = optimal_damping(m, k)
    d = 2 * a_opt * m
    eye = np.eye(big_n)
    zero = np.zeros((big_n, big_n))
    minv_k = np.linalg.solve(m, k)
    a = np.block([[zero, eye], [-minv_k, -2 * a_opt * eye]])
    k_dinv_m = k @ np.linalg.solve(d, m)
    m_dinv_m = m @ np.linalg.solve(d, m)
    g = np.block([[0.5 * d + k_dinv_m, 0.5 * m], [0.5 * m, m_dinv_m]])
    g = 0.5 * (g + g.T)
    c = np.block([[k, zero], [zero, m]])
    return GalleryProblem(
        a=a.astype(np.complex128), label=f"string:N={big_n}",
        g_explicit=g.astype(np.complex128), c_explicit=c.astype(np.complex128),
        half_plane="left",
        parameters={"N": big_n, "a": a_opt, "h": 1.0 / (big_n + 1)})


def kkt_blocks(m, n, seed):
    """Seeded full-row-rank ``B`` of shape ``(m, n)`` and the seed that produced it."""
    while True:
        b = make_rng(seed).standard_normal((m, n))
        if np.linalg.matrix_rank(b) == m:
            return b, seed
        seed += 1


def kkt_matrix(m, n, eta="auto", seed=0):
    """Preconditioned saddle-point matrix ``[[eta I, B*], [-B, 0]]``.

    ``B`` is ``m x n`` with standard-normal entries.  ``eta='auto'`` means
    ``2 ||B||_2 + 0.1``.  ``G = [[I, (2/eta) B*], [(2/eta) B, I]]`` is
    positive definite only when ``eta > 2 ||B||_2``; in that case ``A`` is
    self-adjoint in the ``G`` inner product and ``C = A* G + G A`` is positive
    definite.
    """
    m = check_count(m, "M", 1)
    n = check_count(n, "N", 1)
    if m > n:
        raise ValueError(f"KKT block needs M <= N, got M={m}, N={n}")
    b, used_seed = kkt_blocks(m, n, seed)
    norm_b = spectral_norm(b)
    if isinstance(eta, str):
        if eta != "auto":
            raise ValueError(f"eta must be a number or 'auto', got {eta!r}")
        eta = 2 * norm_b + 0.1
    eta = float(eta)
    if not eta > 0:
        raise ValueError(f"eta must be positive, got {eta}")
    bt = b.T
    a = np.block([[eta * np.eye(n), bt], [-b, np.zeros((m, m))]])
    g = np.block([[np.eye(n), (2 / eta) * bt], [(2 / eta) * b, np.eye(m)]])
    c = np.block([[2 * eta * np.eye(n) - (4 / eta) * bt @ b, 2 * bt],
                  [2 * b, (4 / eta) * b @ bt]])
    return GalleryProblem(
        a=a.astype(np.complex128), label=f"kkt:M={m},N={n},eta={eta!r},seed={seed}",
        g_explicit=g.astype(np.complex128), c_explicit=c.astype(np.complex128),
        half_plane="right",
        parameters={"M": m, "N": n, "eta": eta, "seed": seed,
                    "seed_used": used_seed, "norm_b": norm_b, "b": b})
