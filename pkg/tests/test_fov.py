import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lyapgmres import fov, gallery
from lyapgmres.exceptions import SingularMatrixError
from lyapgmres.gram import GramInnerProduct
from lyapgmres.linalg import schur, spectral_norm


def test_diagonal_normal():
    b = fov.boundary(np.diag([1.0, 3.0]), n_angles=64)
    assert b.mu == pytest.approx(1)
    assert b.radius == pytest.approx(3)
    assert np.max(np.abs(b.points.imag)) <= 1e-12
    assert b.points.real.min() == pytest.approx(1)
    assert b.points.real.max() == pytest.approx(3)


def test_nilpotent_disk(rng):
    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    b = fov.boundary(a, n_angles=256)
    assert b.radius == pytest.approx(0.5, abs=1e-6)
    np.testing.assert_allclose(np.abs(b.points), 0.5, atol=1e-12)
    v = rng.standard_normal((10**6, 2)) + 1j * rng.standard_normal((10**6, 2))
    q = np.abs(v[:, 0].conj() * v[:, 1]) / np.sum(np.abs(v) ** 2, axis=1)
    assert q.max() == pytest.approx(b.radius, abs=1e-3)


def test_hermitian_mu_and_identity_segment(rng):
    x = rng.standard_normal((5, 5))
    h = x + x.T
    assert fov.mu(h) == pytest.approx(np.linalg.eigvalsh(h)[0])
    seg = fov.disk_segment(np.eye(4))
    assert (seg.mu, seg.norm) == pytest.approx((1, 1))


def test_integration_segments(family_s0, family_s05, integration100):
    seg = fov.disk_segment(integration100, family_s0[1])
    assert (seg.mu, seg.norm) == pytest.approx((0.16600, 2.21253), rel=1e-4)
    seg = fov.disk_segment(integration100, family_s05[1])
    assert (seg.mu, seg.norm) == pytest.approx((0.50435, 2.11270), rel=1e-4)


def test_jordan_mu(jordan100, rng):
    from lyapgmres.lyapunov import inverse_iteration
    ip = inverse_iteration(jordan100, np.eye(100), 1)[1]
    m = fov.mu(jordan100, ip)
    assert 3.6e-10 < m < 3.6e-8


def test_string_mu_nonpositive():
    p = gallery.damped_string(16)
    assert fov.mu(p.a) <= 0


@pytest.mark.parametrize("make", [
    lambda: gallery.jordan_matrix(30, 1.1),
    lambda: gallery.integration_matrix(40, 2.0),
    lambda: gallery.damped_string(8).a,
    lambda: gallery.kkt_matrix(4, 8, "auto", 0).a,
])
def test_spectrum_contained_and_radius_bound(make):
    a = make()
    b = fov.boundary(a, n_angles=512)
    tol = 1e-8 * b.scale
    for lam in np.diag(schur(a).t):
        assert fov.contains(b.points, lam, tol)
    assert fov.is_convex_curve(b.points, tol)
    assert b.radius >= 0.5 * spectral_norm(a) * (1 - 1e-12)


def test_grid_refinement(integration100):
    b1 = fov.boundary(integration100, n_angles=1024)
    b2 = fov.boundary(integration100, n_angles=2048)
    assert abs(b1.mu - b2.mu) < 1e-12
    assert abs(b1.radius - b2.radius) < 1e-6 * b1.scale


def test_kkt_interval_in_g():
    p = gallery.kkt_matrix(64, 128, "auto", 7)
    ip = GramInnerProduct.from_matrix(p.g_explicit)
    b = fov.boundary(p.a, ip, n_angles=256)
    eta = p.parameters["eta"]
    assert np.max(np.abs(b.points.imag)) <= 1e-8 * eta
    assert b.points.real.max() == pytest.approx(eta, rel=1e-10)
    assert b.mu > 0


def test_omega_trivial_cases():
    om = fov.omega_set(2 * np.eye(3), n_angles=64)
    assert om.cut_radius == pytest.approx(2)
    np.testing.assert_allclose(om.points, 2, atol=1e-12)
    om = fov.omega_set(np.diag([1.0, 3.0]), n_angles=64)
    assert om.cut_radius == pytest.approx(1)
    assert om.points.real.min() == pytest.approx(1)
    assert om.points.real.max() == pytest.approx(3)


def test_omega_singular():
    with pytest.raises(SingularMatrixError):
        fov.omega_set(np.diag([1.0, 0.0]))


def test_omega_integration(integration100):
    om = fov.omega_set(integration100)
    assert np.min(np.abs(om.points)) >= om.cut_radius - 1e-9
    # W(A) itself contains the origin; the clipped set must not
    assert fov.contains(fov.boundary(integration100).points, 0.0, 0.0)


def test_power_fov():
    np.testing.assert_allclose(fov.power_fov(np.eye(3), 32), 1, atol=1e-12)
    p = fov.power_fov(np.diag([1.0, 4.0]), 64)
    assert np.max(np.abs(p.imag)) <= 1e-12
    assert p.real.min() == pytest.approx(1) and p.real.max() == pytest.approx(4)


def test_power_fov_integration(integration100):
    assert fov.power_fov(integration100).real.min() > 0


@settings(max_examples=15, deadline=None)
@given(n=st.integers(2, 12), seed=st.integers(0, 2**32 - 1))
def test_boundary_points_are_rayleigh_extremes(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    b = fov.boundary(a, n_angles=64)
    # each point attains the support value in its direction
    np.testing.assert_allclose((np.exp(1j * b.angles) * b.points).real, b.support,
                               atol=1e-10 * b.scale)
    assert b.mu == pytest.approx(np.linalg.eigvalsh(0.5 * (a + a.conj().T))[0],
                                 abs=1e-12 * b.scale)
