"""Numerical range (field of values) boundaries and related sets.

The boundary of ``W(M)`` is traced by the rotation sweep: for each angle
``theta`` the largest eigenvalue ``h(theta)`` of the Hermitian part of
``exp(i theta) M`` is the support function of ``W(M)`` in direction
``exp(-i theta)``, and the Rayleigh quotient of ``M`` at the corresponding
eigenvector is a boundary point.  With an inner product ``G = R* R`` the same
sweep is applied to ``R M R^{-1}``.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.optimize import minimize_scalar

from ._validation import as_square, check_count
from .exceptions import SingularMatrixError
from .gram import matrix_norm, transform
from .linalg import hermitian_eigvals, principal_sqrt, schur, spectral_norm

DEFAULT_ANGLES = 1024


@dataclass(frozen=True, eq=False)
class FovBoundary:
    """Discretized boundary of a numerical range.

    Attributes
    ----------
    angles : ndarray
        Uniform grid ``2 pi k / n_angles``.
    support : ndarray
        ``h(theta)``, largest eigenvalue of ``(e^{i theta} M + e^{-i theta} M*)/2``.
    points : ndarray
        Boundary points ``v* M v`` at the top eigenvector ``v`` of each angle.
    mu : float
        ``min Re W(M)``, the smallest eigenvalue of the Hermitian part.
    radius : float
        Numerical radius ``max |z|`` over ``W(M)``.
    scale : float
        ``||M||_2``, used to make tolerances relative.
    """

    angles: np.ndarray
    support: np.ndarray
    points: np.ndarray
    mu: float
    radius: float
    scale: float
    matrix_label: str = ""

    @property
    def re_max(self):
        return float(self.points.real.max())


@dataclass(frozen=True)
class DiskSegment:
    """``{Re z >= mu} & {|z| <= norm}``, an enclosure of the numerical range."""

    mu: float
    norm: float


@dataclass(frozen=True, eq=False)
class OmegaSet:
    """``W(A)`` with the open disk ``|z| < cut_radius`` removed."""

    points: np.ndarray
    cut_radius: float


def _support_at(m, theta):
    h = np.exp(1j * theta) * m
    return _top_eigpair(0.5 * (h + h.conj().T))[0]


def _top_eigpair(h):
    n = h.shape[0]
    w, v = scipy.linalg.eigh(h, subset_by_index=[n - 1, n - 1], driver="evr",
                             check_finite=False)
    if w.size == 0:
        # evr can return nothing for a tightly clustered top eigenvalue
        w, v = scipy.linalg.eigh(h, driver="evd", check_finite=False)
        return float(w[-1]), v[:, -1]
    return float(w[0]), v[:, 0]


def _sweep(m, angles):
    support = np.empty(angles.size)
    points = np.empty(angles.size, dtype=np.complex128)
    mh = m.conj().T
    for k, theta in enumerate(angles):
        rot = np.exp(1j * theta)
        w, v = _top_eigpair(0.5 * (rot * m + rot.conjugate() * mh))
        support[k] = w
        points[k] = v.conj() @ (m @ v)
    return support, points


def _refine_max(m, angles, support):
    k = int(np.argmax(support))
    step = angles[1] - angles[0] if angles.size > 1 else np.pi
    res = minimize_scalar(lambda t: -_support_at(m, t),
                          bounds=(angles[k] - step, angles[k] + step),
                          method="bounded", options={"xatol": 1e-12})
    return max(float(support[k]), -float(res.fun))


def boundary(a, ip=None, n_angles=DEFAULT_ANGLES, label=""):
    """Trace the boundary of ``W(A)`` (or ``W_G(A)`` when `ip` is given).

    Parameters
    ----------
    a : (n, n) array_like
    ip : GramInnerProduct, optional
        Inner product; the sweep runs on ``R A R^{-1}``.
    n_angles : int
        Number of uniformly spaced angles (>= 4).
    """
    a = as_square(a, "a")
    n_angles = check_count(n_angles, "n_angles", 4)
    m = transform(ip, a) if ip is not None else a
    angles = 2 * np.pi * np.arange(n_angles) / n_angles
    support, points = _sweep(m, angles)
    mu_val = float(hermitian_eigvals(m)[0])
    radius = _refine_max(m, angles, support)
    return FovBoundary(angles=angles, support=support, points=points,
                       mu=mu_val, radius=radius, scale=spectral_norm(m),
                       matrix_label=label)


def mu(a, ip=None):
    """``min Re W_G(A)``: smallest eigenvalue of the Hermitian part of ``A_G``."""
    a = as_square(a, "a")
    m = transform(ip, a) if ip is not None else a
    return float(hermitian_eigvals(m)[0])


def disk_segment(a, ip=None):
    """``(mu_G(A), ||A||_G)``, the disk-segment enclosure of ``W_G(A)``."""
    a = as_square(a, "a")
    norm = matrix_norm(ip, a) if ip is not None else spectral_norm(a)
    return DiskSegment(mu=mu(a, ip), norm=norm)


def numerical_radius(a, n_angles=DEFAULT_ANGLES):
    """``max |z|`` over ``W(A)`` from the sweep with one local refinement."""
    a = as_square(a, "a")
    angles = 2 * np.pi * np.arange(n_angles) / n_angles
    support, _ = _sweep(a, angles)
    return _refine_max(a, angles, support)


def _cross(u, v):
    return u.real * v.imag - u.imag * v.real


def _dedupe(points, tol):
    keep = [points[0]]
    for z in points[1:]:
        if abs(z - keep[-1]) > tol:
            keep.append(z)
    if len(keep) > 1 and abs(keep[-1] - keep[0]) <= tol:
        keep.pop()
    return np.asarray(keep)


def polygon_area(points):
    p = np.asarray(points)
    q = np.roll(p, -1)
    return 0.5 * float(np.sum(_cross(p, q)))


def is_convex_curve(points, tol):
    """True if the closed polygon turns one way only (up to `tol`)."""
    p = _dedupe(np.asarray(points), tol)
    if p.size < 3:
        return True
    e = np.roll(p, -1) - p
    turn = _cross(e, np.roll(e, -1))
    return bool(np.all(turn >= -tol) or np.all(turn <= tol))


def contains(points, z, tol):
    """True if `z` lies in the convex polygon `points` (or within `tol` of it)."""
    p = _dedupe(np.asarray(points), tol)
    if p.size == 1:
        return abs(z - p[0]) <= tol
    if p.size == 2 or abs(polygon_area(p)) <= tol * tol:
        return _segment_distance(p, z) <= tol
    if polygon_area(p) < 0:
        p = p[::-1]
    e = np.roll(p, -1) - p
    dist = _cross(e, z - p) / np.abs(e)
    return bool(np.all(dist >= -tol))


def _segment_distance(p, z):
    i, j = _extreme_pair(p)
    a, b = p[i], p[j]
    d = b - a
    if abs(d) == 0:
        return abs(z - a)
    t = np.clip(((z - a) * d.conjugate()).real / abs(d) ** 2, 0, 1)
    return abs(z - (a + t * d))


def _extreme_pair(p):
    dist = np.abs(p[:, None] - p[None, :])
    i, j = np.unravel_index(np.argmax(dist), dist.shape)
    return i, j


def _ray_intervals(poly, phis):
    """Parameter range ``[t0, t1]`` of ``t e^{i phi}`` (t >= 0) inside a CCW polygon."""
    e = np.roll(poly, -1) - poly
    u = np.exp(1j * phis)
    den = _cross(e[None, :], u[:, None])
    num = np.broadcast_to(_cross(e, poly)[None, :], den.shape)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = num / den
    lower = np.where(den > 0, ratio, -np.inf).max(axis=1)
    upper = np.where(den < 0, ratio, np.inf).min(axis=1)
    # edges parallel to the ray must have the origin on their inner side
    par_ok = np.all((den != 0) | (num <= 0), axis=1)
    t0 = np.maximum(lower, 0.0)
    t1 = np.where(par_ok, upper, -np.inf)
    return t0, t1


def omega_set(a, n_angles=DEFAULT_ANGLES):
    """Clip ``W(A)`` to ``|z| >= 1 / r(A^{-1})``.

    Returns the closed boundary of the clipped set as an :class:`OmegaSet`.
    The clipping is done in polar coordinates about the origin: for each ray
    the part of ``W(A)`` inside the cut disk is removed.
    """
    a = as_square(a, "a")
    scale = spectral_norm(a)
    lam = np.diag(schur(a).t)
    if np.min(np.abs(lam)) <= 1e-12 * scale:
        raise SingularMatrixError(
            f"matrix is singular: eigenvalue of modulus {np.min(np.abs(lam)):.3e}")
    ainv = np.linalg.solve(a, np.eye(a.shape[0]))
    cut = 1.0 / numerical_radius(ainv, n_angles)
    bnd = boundary(a, n_angles=n_angles)
    tol = 1e-12 * max(scale, 1.0)
    poly = _dedupe(bnd.points, tol)
    if poly.size <= 2 or abs(polygon_area(poly)) <= tol * max(scale, 1.0):
        return OmegaSet(points=_clip_segment(poly, cut, n_angles, tol),
                        cut_radius=cut)
    if polygon_area(poly) < 0:
        poly = poly[::-1]
    if contains(poly, 0.0, 0.0):
        phis = 2 * np.pi * np.arange(n_angles) / n_angles
    else:
        centre = np.angle(poly.mean())
        rel = np.angle(poly * np.exp(-1j * centre))
        phis = centre + np.linspace(rel.min(), rel.max(), n_angles)
    t0, t1 = _ray_intervals(poly, phis)
    inner_t = np.maximum(t0, cut)
    ok = t1 >= inner_t
    u = np.exp(1j * phis[ok])
    outer = t1[ok] * u
    inner = inner_t[ok] * u
    return OmegaSet(points=np.concatenate([outer, inner[::-1]]), cut_radius=cut)


def _clip_segment(poly, cut, n_samples, tol):
    if poly.size == 1:
        z = poly[:1]
        return z if abs(z[0]) >= cut - tol else z[:0]
    i, j = _extreme_pair(poly)
    p, d = poly[i], poly[j] - poly[i]
    ts = np.linspace(0.0, 1.0, n_samples)
    # |p + t d|^2 = cut^2
    qa, qb, qc = abs(d) ** 2, 2 * (p * d.conjugate()).real, abs(p) ** 2 - cut ** 2
    roots = np.roots([qa, qb, qc])
    roots = roots[np.isreal(roots)].real
    ts = np.union1d(ts, roots[(roots >= 0) & (roots <= 1)])
    z = p + ts * d
    return z[np.abs(z) >= cut - tol]


def power_fov(a, n_angles=DEFAULT_ANGLES):
    """Boundary of ``W(A^{1/2})^2 = {z^2 : z in W(A^{1/2})}``."""
    s = principal_sqrt(as_square(a, "a"))
    return boundary(s, n_angles=n_angles).points ** 2
