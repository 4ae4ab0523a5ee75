"""scikit-learn style wrappers around the numerical kernels.

The "data" passed to ``fit`` is a single square system matrix ``A``, which
may be complex.  scikit-learn's own ``check_array`` rejects complex input, so
validation is done with this package's helpers.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import bounds, fov
from ._validation import as_square, check_count
from .gram import GramInnerProduct, matrix_norm, transform
from .lyapunov import inverse_iteration


def _initial_c(a, c):
    n = a.shape[0]
    if isinstance(c, str):
        if c == "identity":
            return np.eye(n, dtype=np.complex128)
        if c == "hermitian-part":
            return a + a.conj().T
        if c == "diagonalization":
            lam, v = np.linalg.eig(a)
            v = v / np.linalg.norm(v, axis=0)
            vinv = np.linalg.solve(v, np.eye(n))
            return vinv.conj().T @ np.diag(lam.conj() + lam) @ vinv
        raise ValueError(f"unknown C choice {c!r}")
    c = as_square(c, "C")
    if c.shape != a.shape:
        raise ValueError(f"C has shape {c.shape}, expected {a.shape}")
    return c


class LyapunovInnerProduct(TransformerMixin, BaseEstimator):
    """Learn the inner product ``G_m`` of Lyapunov inverse iteration for ``A``.

    Parameters
    ----------
    c : {'identity', 'hermitian-part', 'diagonalization'} or array, default='identity'
        Right-hand side ``C = G_0``.
    shift : float, default=0.0
        Shift ``s >= 0``; must stay left of every eigenvalue's real part.
    n_iter : int, default=1
        Number of inverse-iteration steps ``m``.

    Attributes
    ----------
    inner_product_ : GramInnerProduct
    gram_ : ndarray
        The Hermitian positive definite ``G_m``.
    sqrt_kappa2_ : float
    n_features_in_ : int
    """

    def __init__(self, c="identity", shift=0.0, n_iter=1):
        self.c = c
        self.shift = shift
        self.n_iter = n_iter

    def fit(self, X, y=None):
        a = as_square(X, "X")
        n_iter = check_count(self.n_iter, "n_iter", 1)
        family = inverse_iteration(a, _initial_c(a, self.c), n_iter,
                                   shift=self.shift)
        self.inner_product_ = family[n_iter]
        self.gram_ = self.inner_product_.g
        self.sqrt_kappa2_ = self.inner_product_.sqrt_kappa2
        self.n_features_in_ = a.shape[0]
        return self

    def transform(self, X):
        """``R X R^{-1}``: `X` expressed in coordinates where ``G`` is Euclidean."""
        check_is_fitted(self, "inner_product_")
        x = as_square(X, "X")
        if x.shape[0] != self.n_features_in_:
            raise ValueError(f"X has {x.shape[0]} rows, expected {self.n_features_in_}")
        return transform(self.inner_product_, x)


class FieldOfValues(BaseEstimator):
    """Discretized boundary of ``W_G(A)``; Euclidean when `gram` is ``None``.

    Attributes
    ----------
    boundary_ : FovBoundary
    mu_ : float
        ``min Re W_G(A)``.
    radius_ : float
        Numerical radius.
    """

    def __init__(self, n_angles=fov.DEFAULT_ANGLES, gram=None):
        self.n_angles = n_angles
        self.gram = gram

    def fit(self, X, y=None):
        a = as_square(X, "X")
        ip = None if self.gram is None else GramInnerProduct.from_matrix(self.gram)
        self.boundary_ = fov.boundary(a, ip, check_count(self.n_angles, "n_angles", 4))
        self.mu_ = self.boundary_.mu
        self.radius_ = self.boundary_.radius
        return self

    def transform(self, X=None):
        """Boundary points as a complex array."""
        check_is_fitted(self, "boundary_")
        return self.boundary_.points


class GmresBoundEstimator(BaseEstimator):
    """Predict GMRES relative residual bounds ``constant * rho**k`` for ``A``.

    Parameters
    ----------
    kind : {'elman', 'beckermann', 'cp_circle'}, default='cp_circle'
    c, shift, n_iter
        Passed to :class:`LyapunovInnerProduct`.
    n_angles : int
        Boundary resolution used for ``mu_G`` and the circle rate.

    Attributes
    ----------
    constant_, rate_ : float
    mu_g_, norm_g_, sqrt_kappa2_ : float
    """

    def __init__(self, kind=bounds.CP_CIRCLE, c="identity", shift=0.0, n_iter=1,
                 n_angles=fov.DEFAULT_ANGLES):
        self.kind = kind
        self.c = c
        self.shift = shift
        self.n_iter = n_iter
        self.n_angles = n_angles

    def fit(self, X, y=None):
        if self.kind not in (bounds.ELMAN, bounds.BECKERMANN, bounds.CP_CIRCLE):
            raise ValueError(f"unknown bound kind {self.kind!r}")
        a = as_square(X, "X")
        ip = LyapunovInnerProduct(self.c, self.shift, self.n_iter).fit(a).inner_product_
        bnd = fov.boundary(a, ip, check_count(self.n_angles, "n_angles", 4))
        self.mu_g_ = bnd.mu
        self.norm_g_ = matrix_norm(ip, a)
        self.sqrt_kappa2_ = ip.sqrt_kappa2
        if self.kind == bounds.ELMAN:
            curve = bounds.elman(self.mu_g_, self.norm_g_, ip.kappa2, 0)
        elif self.kind == bounds.BECKERMANN:
            curve = bounds.beckermann(self.mu_g_, self.norm_g_, ip.kappa2, 0)
        else:
            curve = bounds.cp_circle(bnd, ip.kappa2, 0)
        self.constant_ = curve.constant
        self.rate_ = curve.rate
        return self

    def predict(self, k):
        """Bound values at iteration counts `k` (array-like of nonnegative ints)."""
        check_is_fitted(self, "rate_")
        k = np.asarray(k)
        if np.any(k < 0):
            raise ValueError("iteration counts must be nonnegative")
        return self.constant_ * self.rate_ ** k.astype(float)

    def iterations_to(self, rtol):
        """Smallest ``k`` at which the bound drops to `rtol` or below."""
        check_is_fitted(self, "rate_")
        if self.constant_ <= rtol:
            return 0
        if self.rate_ == 0:
            return 1
        return int(np.ceil(np.log(rtol / self.constant_) / np.log(self.rate_)))
