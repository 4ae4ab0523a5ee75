"""Inner products ``<v, w>_G = w* G v`` defined by a positive definite ``G``."""

from dataclasses import dataclass, field

import numpy as np

from ._validation import as_square, as_vector, check_same_size, hermitian_part
from .exceptions import NotPositiveDefiniteError
from .linalg import cholesky, hermitian_eigen, solve_triangular, spectral_norm

CHOLESKY = "cholesky"
EIGEN_SQRT = "eigen-sqrt"


@dataclass(frozen=True, eq=False)
class GramInnerProduct:
    """A Hermitian positive definite ``G`` together with a factor ``R*R = G``.

    Use :meth:`from_matrix` rather than the constructor; it picks the factor
    and computes ``kappa2 = lambda_max(G) / lambda_min(G)`` from the
    eigenvalues of ``G`` (``G^{-1}`` is never formed).

    For ``factor_kind == 'eigen-sqrt'`` the factor is ``R = diag(sqrt(w)) V*``
    and the eigen pair is kept so that ``R^{-1}`` can be applied as a
    diagonal scaling followed by a unitary map.
    """

    g: np.ndarray
    r: np.ndarray
    kappa2: float
    factor_kind: str = CHOLESKY
    warnings: tuple = ()
    _eig: tuple = field(default=None, repr=False)

    @classmethod
    def from_matrix(cls, g, factor="auto", clip=None):
        """Build an inner product from ``G``.

        Parameters
        ----------
        g : (n, n) array_like
            Hermitian positive definite matrix; symmetrized on entry.
        factor : {'auto', 'cholesky', 'eigen-sqrt'}
            ``'auto'`` tries Cholesky and falls back to the eigen square root.
        clip : float, optional
            Relative floor for eigenvalues in the eigen square-root route.
            Eigenvalues below ``clip * lambda_max`` are raised to that value and
            a warning is recorded.  ``None`` disallows clipping: a non-positive
            eigenvalue raises ``NotPositiveDefiniteError``.
        """
        g = hermitian_part(as_square(g, "g"))
        eig = hermitian_eigen(g)
        w, v = eig.values, eig.vectors
        notes = []
        if factor in ("auto", CHOLESKY):
            try:
                r = cholesky(g)
            except NotPositiveDefiniteError:
                if factor == CHOLESKY:
                    raise
                notes.append("Cholesky failed; using eigen square-root factor")
            else:
                if w[0] <= 0:
                    raise NotPositiveDefiniteError(
                        0, float(w[0]),
                        f"G has eigenvalue {w[0]:.3e} <= 0 although Cholesky "
                        f"succeeded")
                return cls(g=g, r=r, kappa2=float(w[-1] / w[0]),
                           factor_kind=CHOLESKY, warnings=tuple(notes))
        elif factor != EIGEN_SQRT:
            raise ValueError(f"unknown factor kind {factor!r}")
        floor = 0.0 if clip is None else clip * w[-1]
        if w[-1] <= 0 or (clip is None and w[0] <= 0):
            raise NotPositiveDefiniteError(
                int(np.argmin(w)), float(w[0]),
                f"G is not positive definite: lambda_min = {w[0]:.3e}")
        if w[0] < floor:
            notes.append(f"clipped {int(np.sum(w < floor))} eigenvalue(s) of G "
                         f"below {floor:.3e}; precision loss likely")
            w = np.maximum(w, floor)
            g = (v * w) @ v.conj().T
        sw = np.sqrt(w)
        r = sw[:, None] * v.conj().T
        return cls(g=g, r=r, kappa2=float(w[-1] / w[0]), factor_kind=EIGEN_SQRT,
                   warnings=tuple(notes), _eig=(sw, v))

    @classmethod
    def identity(cls, n):
        eye = np.eye(n, dtype=np.complex128)
        return cls(g=eye, r=eye.copy(), kappa2=1.0)

    @property
    def n(self):
        return self.g.shape[0]

    @property
    def sqrt_kappa2(self):
        return float(np.sqrt(self.kappa2))

    def apply_r(self, x):
        """Return ``R x``."""
        return self.r @ x

    def solve_r(self, x):
        """Return ``R^{-1} x`` without forming ``R^{-1}``."""
        if self.factor_kind == CHOLESKY:
            return solve_triangular(self.r, x)
        sw, v = self._eig
        y = np.asarray(x, dtype=np.complex128)
        y = y / sw if y.ndim == 1 else y / sw[:, None]
        return v @ y

    def solve_r_right(self, x):
        """Return ``x R^{-1}``."""
        if self.factor_kind == CHOLESKY:
            return solve_triangular(self.r, x, side="right")
        sw, v = self._eig
        return (np.asarray(x) @ v) / sw[None, :]


def inner(ip, v, w):
    """``<v, w>_G = w* G v``."""
    v = as_vector(v, ip.n, "v")
    w = as_vector(w, ip.n, "w")
    return complex(w.conj() @ (ip.g @ v))


def vector_norm(ip, v):
    """``||v||_G = ||R v||_2``."""
    v = as_vector(v, ip.n, "v")
    return float(np.linalg.norm(ip.apply_r(v)))


def transform(ip, a):
    """Similarity transform ``A_G = R A R^{-1}``."""
    a = as_square(a, "a")
    check_same_size(ip.g, a, ("G", "A"))
    return ip.solve_r_right(ip.apply_r(a))


def matrix_norm(ip, x):
    """Induced norm ``||X||_G = ||R X R^{-1}||_2``."""
    return spectral_norm(transform(ip, x))
