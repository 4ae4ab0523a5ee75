"""GMRES residual bounds of the form ``constant * rate**k``.

Every bound here has the shape ``||r_k|| / ||b|| <= sqrt(kappa2(G)) * c * rho**k``
for an inner product ``G`` in which the numerical range of ``A`` lies in the
open right half-plane:

* ``elman``: ``rho = sqrt(1 - mu^2 / ||A||_G^2)``, ``c = 1``;
* ``beckermann``: ``cos(beta) = mu / ||A||_G``,
  ``rho = 2 sin(beta pi / (4 pi - 2 beta))``, ``c = 2 + rho``;
* ``cp_circle``: ``rho = max |1 - z/c|`` over ``W_G(A)`` where ``c`` is the
  midpoint of its real extent, constant ``1 + sqrt(2)``.  The objective is
  convex in ``z``, so its maximum over the convex set is attained on the
  boundary and the maximum over the discretized boundary points is used.
"""

from dataclasses import asdict, dataclass, field

import numpy as np

from ._validation import as_square, check_count
from .exceptions import HalfPlaneError
from .lyapunov import gram_from_solution, solve

ELMAN = "elman"
BECKERMANN = "beckermann"
CP_CIRCLE = "cp_circle"
DIAGONALIZATION = "diagonalization"

VIOLATION_SLACK = 1e-8
# residuals below this are roundoff; a zero bound value is compared against it
RESIDUAL_FLOOR = 1e-14
EIGVEC_COND_CAP = 1e14


@dataclass(eq=False)
class BoundCurve:
    kind: str
    constant: float
    rate: float
    values: np.ndarray
    inputs: dict = field(default_factory=dict)

    def summary(self):
        """JSON-ready dict ``{kind, constant, rate, mu_g, norm_g, sqrt_kappa2}``."""
        out = {"kind": self.kind, "constant": self.constant, "rate": self.rate}
        for key in ("mu_g", "norm_g", "sqrt_kappa2"):
            out[key] = self.inputs.get(key)
        return out


@dataclass(frozen=True)
class BoundValidation:
    kind: str
    max_ratio: float
    argmax_k: int
    violation: bool

    def as_dict(self):
        return asdict(self)


def _curve(kind, constant, rate, k_max, **inputs):
    k_max = check_count(k_max, "k_max")
    values = constant * rate ** np.arange(k_max + 1, dtype=float)
    return BoundCurve(kind=kind, constant=float(constant), rate=float(rate),
                      values=values, inputs=inputs)


def _check_segment(mu_g, norm_g, kappa2):
    if not mu_g > 0:
        raise HalfPlaneError(
            mu_g, f"mu = {mu_g:.6g} <= 0: the numerical range contains the "
                  f"origin and the bound does not apply")
    if mu_g > norm_g * (1 + 1e-12):
        raise ValueError(f"mu ({mu_g}) cannot exceed the norm ({norm_g})")
    if kappa2 < 1 - 1e-12:
        raise ValueError(f"kappa2 must be >= 1, got {kappa2}")


def elman_rate(mu_g, norm_g):
    ratio = min(mu_g / norm_g, 1.0)
    return float(np.sqrt(1.0 - ratio ** 2))


def beckermann_rate(mu_g, norm_g):
    beta = float(np.arccos(min(mu_g / norm_g, 1.0)))
    return float(2 * np.sin(beta * np.pi / (4 * np.pi - 2 * beta)))


def elman(mu_g, norm_g, kappa2, k_max):
    """Elman-type bound in the ``G`` inner product."""
    _check_segment(mu_g, norm_g, kappa2)
    return _curve(ELMAN, np.sqrt(kappa2), elman_rate(mu_g, norm_g), k_max,
                  mu_g=mu_g, norm_g=norm_g, sqrt_kappa2=float(np.sqrt(kappa2)))


def beckermann(mu_g, norm_g, kappa2, k_max):
    """Beckermann-type bound with constant ``sqrt(kappa2) * (2 + rho)``."""
    _check_segment(mu_g, norm_g, kappa2)
    rate = beckermann_rate(mu_g, norm_g)
    return _curve(BECKERMANN, np.sqrt(kappa2) * (2 + rate), rate, k_max,
                  mu_g=mu_g, norm_g=norm_g, sqrt_kappa2=float(np.sqrt(kappa2)))


def circle_rate(boundary):
    """``(c, rho_G)`` for the circle centred at the midpoint of ``Re W``.

    Needs a boundary whose angle grid starts at ``theta = 0``.
    """
    if not boundary.mu > 0:
        raise HalfPlaneError(
            boundary.mu, f"mu = {boundary.mu:.6g} <= 0: the set is not in the "
                         f"open right half-plane")
    # exact real extent: mu = min Re W and h(0) = max Re W
    c = 0.5 * (boundary.mu + float(boundary.support[0]))
    rho = float(np.max(np.abs(1.0 - boundary.points / c)))
    return c, rho


def cp_circle(boundary, kappa2, k_max):
    """Crouzeix--Palencia bound relaxed to the enclosing circle."""
    c, rho = circle_rate(boundary)
    return _curve(CP_CIRCLE, np.sqrt(kappa2) * (1 + np.sqrt(2)), rho, k_max,
                  mu_g=boundary.mu, centre=c, sqrt_kappa2=float(np.sqrt(kappa2)))


def diagonalization_constant(a):
    """``sqrt(kappa2(G))`` for ``C = V^{-*}(Lambda* + Lambda)V^{-1}``.

    With unit-norm eigenvector columns ``V`` the solution is ``G = V^{-*} V^{-1}``
    and the returned value equals ``kappa2(V)``.
    """
    a = as_square(a, "a")
    lam, v = np.linalg.eig(a)
    v = v / np.linalg.norm(v, axis=0)
    cond_v = np.linalg.cond(v)
    if not cond_v < EIGVEC_COND_CAP:
        raise ValueError(f"matrix is defective to working precision: "
                         f"cond(V) = {cond_v:.3e}")
    vinv = np.linalg.solve(v, np.eye(a.shape[0]))
    c = vinv.conj().T @ np.diag(lam.conj() + lam) @ vinv
    ip = gram_from_solution(solve(a, c))
    return ip.sqrt_kappa2


def diagonalization(a, k_max, spectrum_rate=None):
    """Diagonalization bound ``kappa2(V) * rate**k``.

    Without `spectrum_rate` the circle rate of the spectrum (midpoint of the
    real extent of the eigenvalues) is used.
    """
    a = as_square(a, "a")
    const = diagonalization_constant(a)
    if spectrum_rate is None:
        lam = np.linalg.eigvals(a)
        c = 0.5 * (lam.real.min() + lam.real.max())
        spectrum_rate = float(np.max(np.abs(1 - lam / c)))
    return _curve(DIAGONALIZATION, const, spectrum_rate, k_max,
                  sqrt_kappa2=const)


def validate(trace, curve):
    """Largest ``trace[k] / curve[k]`` over the common range of ``k``.

    Bound values under ``RESIDUAL_FLOOR`` are raised to it so that a rate-0
    bound is not reported as violated by a roundoff-level residual.
    """
    res = np.asarray(trace.rel_residuals)
    vals = np.asarray(curve.values)
    k = min(res.size, vals.size)
    ratio = res[:k] / np.maximum(vals[:k], RESIDUAL_FLOOR)
    j = int(np.argmax(ratio))
    worst = float(ratio[j])
    return BoundValidation(kind=curve.kind, max_ratio=worst, argmax_k=j,
                           violation=worst > 1 + VIOLATION_SLACK)


def display_values(curve):
    """Curve values truncated at 1 for plotting; stored values stay untouched."""
    return np.minimum(curve.values, 1.0)
