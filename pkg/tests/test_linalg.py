import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_hpd, random_matrix
from lyapgmres import gallery, linalg
from lyapgmres.exceptions import NotPositiveDefiniteError


def test_hermitian_eigen_small_cases():
    np.testing.assert_allclose(linalg.hermitian_eigen(np.diag([2.0, 1.0])).values,
                               [1, 2])
    np.testing.assert_allclose(
        linalg.hermitian_eigen(np.array([[0.0, 1.0], [1.0, 0.0]])).values, [-1, 1])


def test_hermitian_eigen_reconstruction(rng):
    x = random_matrix(rng, 8)
    h = x + x.conj().T
    e = linalg.hermitian_eigen(h)
    assert np.all(np.diff(e.values) >= 0)
    recon = e.vectors @ np.diag(e.values) @ e.vectors.conj().T
    assert linalg.spectral_norm(h - recon) <= 1e-12 * linalg.spectral_norm(h)


def test_hermitian_eigen_rejects_nonhermitian():
    with pytest.raises(ValueError):
        linalg.hermitian_eigen(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_rayleigh_quotients_inside_spectrum(rng):
    x = random_matrix(rng, 6)
    h = x + x.conj().T
    e = linalg.hermitian_eigen(h)
    v = rng.standard_normal((1000, 6)) + 1j * rng.standard_normal((1000, 6))
    q = np.einsum("ij,jk,ik->i", v.conj(), h, v).real / np.sum(abs(v) ** 2, axis=1)
    tol = 1e-12 * linalg.spectral_norm(h)
    assert q.min() >= e.min - tol and q.max() <= e.max + tol


def test_schur_identity_and_triangular():
    dec = linalg.schur(np.eye(4))
    np.testing.assert_allclose(dec.t, np.eye(4), atol=1e-15)
    t = np.triu(np.arange(1.0, 10.0).reshape(3, 3))
    np.testing.assert_allclose(np.sort(linalg.schur(t).eigenvalues.real),
                               np.sort(np.diag(t)))


def test_schur_reconstruction(rng):
    a = random_matrix(rng, 10)
    dec = linalg.schur(a)
    assert np.allclose(np.tril(dec.t, -1), 0)
    err = linalg.spectral_norm(a - dec.q @ dec.t @ dec.q.conj().T)
    assert err <= 1e-11 * linalg.spectral_norm(a)


def test_schur_of_hermitian_matches_eigen(rng):
    x = random_matrix(rng, 7)
    h = x + x.conj().T
    s = np.sort(linalg.schur(h).eigenvalues.real)
    np.testing.assert_allclose(s, linalg.hermitian_eigen(h).values,
                               atol=1e-9 * linalg.spectral_norm(h))


def test_spectral_norm_examples(rng):
    assert linalg.spectral_norm(np.diag([3.0, -1.0])) == pytest.approx(3)
    assert linalg.spectral_norm(np.array([[0.0, 2.0], [0.0, 0.0]])) == pytest.approx(2)
    x = random_matrix(rng, 7)[:, :5]
    oracle = np.sqrt(linalg.hermitian_eigen(x.conj().T @ x).max)
    assert linalg.spectral_norm(x) == pytest.approx(oracle, rel=1e-10)


def test_spectral_norm_unitary_invariance(rng):
    x = random_matrix(rng, 6)
    q, _ = np.linalg.qr(random_matrix(rng, 6))
    assert linalg.spectral_norm(q @ x) == pytest.approx(linalg.spectral_norm(x),
                                                        rel=1e-10)


def test_cholesky_examples(rng):
    np.testing.assert_allclose(linalg.cholesky(np.eye(3)), np.eye(3))
    np.testing.assert_allclose(linalg.cholesky(np.diag([4.0, 9.0])), np.diag([2, 3]))
    g = random_hpd(rng, 9)
    r = linalg.cholesky(g)
    assert np.allclose(np.tril(r, -1), 0)
    assert linalg.spectral_norm(r.conj().T @ r - g) <= 1e-12 * linalg.spectral_norm(g)


def test_cholesky_reports_pivot():
    with pytest.raises(NotPositiveDefiniteError) as info:
        linalg.cholesky(np.diag([1.0, -2.0, 3.0]))
    assert info.value.index == 1
    assert info.value.pivot == pytest.approx(-2.0)
    assert isinstance(info.value, np.linalg.LinAlgError)


def test_solve_triangular_examples(rng):
    b = random_matrix(rng, 4)
    np.testing.assert_allclose(linalg.solve_triangular(np.eye(4), b), b)
    np.testing.assert_allclose(linalg.solve_triangular(np.array([[2.0]]), [4.0]), [2])
    t = np.triu(random_matrix(rng, 8)) + 4 * np.eye(8)
    b = random_matrix(rng, 8)
    x = linalg.solve_triangular(t, b)
    assert (linalg.spectral_norm(t @ x - b)
            <= 1e-12 * linalg.spectral_norm(t) * linalg.spectral_norm(x))


@pytest.mark.parametrize("trans", ["N", "T", "C"])
@pytest.mark.parametrize("side", ["left", "right"])
def test_solve_triangular_variants(rng, side, trans):
    t = np.triu(random_matrix(rng, 5)) + 3 * np.eye(5)
    b = random_matrix(rng, 5)
    x = linalg.solve_triangular(t, b, side=side, trans=trans)
    op = {"N": t, "T": t.T, "C": t.conj().T}[trans]
    np.testing.assert_allclose(op @ x if side == "left" else x @ op, b, atol=1e-12)


def test_solve_triangular_singular():
    with pytest.raises(np.linalg.LinAlgError):
        linalg.solve_triangular(np.array([[1.0, 1.0], [0.0, 0.0]]), np.ones(2))


def test_principal_sqrt_examples():
    np.testing.assert_allclose(linalg.principal_sqrt(np.eye(3)), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(linalg.principal_sqrt(np.diag([4.0, 9.0])),
                               np.diag([2, 3]), atol=1e-15)


@pytest.mark.parametrize("make", [
    lambda: gallery.integration_matrix(10, 2.0),
    lambda: gallery.integration_matrix(100, 2.0),
    lambda: gallery.jordan_matrix(100, 1.1),
    lambda: gallery.kkt_matrix(8, 16, "auto", 1).a,
])
def test_principal_sqrt_squares_back(make):
    a = make()
    s = linalg.principal_sqrt(a)
    assert linalg.spectral_norm(s @ s - a) <= 1e-10 * linalg.spectral_norm(a)
    assert np.all(np.linalg.eigvals(s).real > 0)


def test_principal_sqrt_rejects_negative_axis():
    with pytest.raises(ValueError):
        linalg.principal_sqrt(np.diag([1.0, -1.0]))


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 12), seed=st.integers(0, 2**32 - 1))
def test_cholesky_property(n, seed):
    g = random_hpd(np.random.default_rng(seed), n)
    r = linalg.cholesky(g)
    assert linalg.spectral_norm(r.conj().T @ r - g) <= 1e-12 * linalg.spectral_norm(g)
