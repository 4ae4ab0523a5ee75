import numpy as np
import pytest

from lyapgmres import bounds, fov, gallery, gmres
from lyapgmres.exceptions import HalfPlaneError
from lyapgmres.gram import matrix_norm
from lyapgmres.linalg import spectral_norm
from lyapgmres.lyapunov import inverse_iteration


def test_elman_rates():
    assert bounds.elman(0.16600, 2.21253, 1.0, 3).rate == pytest.approx(0.99718, abs=1e-5)
    assert bounds.elman(0.58366, 1.89110, 1.0, 3).rate == pytest.approx(0.95118, abs=1e-5)
    assert bounds.elman(2.0, 2.0, 1.0, 3).rate == 0


def test_beckermann_rates():
    assert bounds.beckermann(0.16600, 2.21253, 1.0, 3).rate == pytest.approx(0.94257, abs=1e-5)
    assert bounds.beckermann(0.50435, 2.11270, 1.0, 3).rate == pytest.approx(0.81859, abs=1e-5)
    c = bounds.beckermann(1.0, 1.0, 4.0, 2)
    assert c.rate == 0 and c.constant == pytest.approx(4.0)


def test_curve_values_exact():
    c = bounds.elman(0.3, 1.7, 9.0, 10)
    np.testing.assert_array_equal(c.values, c.constant * c.rate ** np.arange(11.0))
    assert c.constant == 3.0


def test_inapplicable():
    with pytest.raises(HalfPlaneError):
        bounds.elman(-0.1, 1.0, 1.0, 5)
    with pytest.raises(HalfPlaneError):
        bounds.beckermann(0.0, 1.0, 1.0, 5)
    with pytest.raises(ValueError):
        bounds.elman(0.5, 1.0, 0.5, 5)


def test_circle_interval():
    b = fov.boundary(np.diag([1.0, 3.0]), n_angles=64)
    c, rho = bounds.circle_rate(b)
    assert c == pytest.approx(2) and rho == pytest.approx(0.5)
    curve = bounds.cp_circle(b, 1.0, 6)
    np.testing.assert_allclose(curve.values, (1 + np.sqrt(2)) * 0.5 ** np.arange(7.0))
    assert curve.rate == rho


def test_integration_circle_m1(family_s0, integration100):
    ip = family_s0[1]
    b = fov.boundary(integration100, ip, n_angles=2048)
    curve = bounds.cp_circle(b, ip.kappa2, 0)
    assert curve.rate == pytest.approx(0.88107, abs=5e-3)
    assert curve.values[0] == pytest.approx(3.49787 * (1 + np.sqrt(2)), rel=1e-5)


def test_elman_euclidean_classic(rng):
    a = rng.standard_normal((8, 8)) + 4 * np.eye(8)
    mu = fov.mu(a)
    c = bounds.elman(mu, spectral_norm(a), 1.0, 4)
    assert c.constant == 1
    assert c.rate == pytest.approx(np.sqrt(1 - mu ** 2 / spectral_norm(a) ** 2))


@pytest.mark.parametrize("shift", [0.0, 0.5])
def test_rate_ordering_and_monotonicity(shift, family_s0, family_s05, integration100):
    fam = family_s0 if shift == 0 else family_s05
    mus, norms = [], []
    for m, ip in fam:
        b = fov.boundary(integration100, ip)
        norm = matrix_norm(ip, integration100)
        rho_e = bounds.elman_rate(b.mu, norm)
        rho_b = bounds.beckermann_rate(b.mu, norm)
        rho_g = bounds.circle_rate(b)[1]
        assert rho_g <= rho_b + 1e-9 and rho_b <= rho_e + 1e-9
        mus.append(b.mu)
        norms.append(norm)
    assert np.all(np.diff(mus) > 0) and np.all(np.diff(norms) < 0)


def test_diagonalization_constant():
    assert bounds.diagonalization_constant(np.diag([1.0, 2.0])) == pytest.approx(1)
    q, _ = np.linalg.qr(np.random.default_rng(1).standard_normal((6, 6)))
    normal = q @ np.diag(np.arange(1.0, 7.0)) @ q.T
    assert bounds.diagonalization_constant(normal) == pytest.approx(1, rel=1e-10)


def test_diagonalization_two_routes(rng):
    lam = rng.uniform(0.5, 3, 10) + 1j * rng.uniform(-1, 1, 10)
    v = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
    a = v @ np.diag(lam) @ np.linalg.inv(v)
    _, w = np.linalg.eig(a)
    w /= np.linalg.norm(w, axis=0)
    assert bounds.diagonalization_constant(a) == pytest.approx(np.linalg.cond(w), rel=1e-6)


def test_diagonalization_rejects_defective():
    with pytest.raises(ValueError):
        bounds.diagonalization_constant(gallery.jordan_matrix(30, 1.0))


def test_validate_identity_trace():
    tr = gmres.run(np.eye(4), np.ones(4))
    v = bounds.validate(tr, bounds.elman(0.5, 1.0, 1.0, 3))
    assert not v.violation and v.max_ratio <= 1


def test_validate_flags_violation():
    tr = gmres.run(np.eye(4), np.ones(4))
    bad = bounds.BoundCurve("elman", 0.5, 0.1, np.array([0.5, 0.05]))
    v = bounds.validate(tr, bad)
    assert v.violation and v.argmax_k == 0


def test_display_truncation():
    c = bounds.elman(0.1, 1.0, 100.0, 3)
    assert np.all(bounds.display_values(c) <= 1)
    assert c.values[0] == 10


@pytest.mark.slow
def test_jordan_traces_dominated(jordan100):
    ip = inverse_iteration(jordan100, np.eye(100), 1)[1]
    b = fov.boundary(jordan100, ip)
    norm = matrix_norm(ip, jordan100)
    traces = gmres.trial_ensemble(jordan100, 100, seed=0)
    curve = bounds.elman(b.mu, norm, ip.kappa2, max(t.iterations for t in traces))
    worst = max(bounds.validate(t, curve).max_ratio for t in traces)
    assert worst < 1
