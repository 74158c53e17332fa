import numpy as np
import pytest

from esdsim.linalg import EigDecomposition, dagger, hermitian_eig, kron, psd_sqrt
from esdsim.states import XStateParams, x_state

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def random_complex(rng, n=2):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def test_kron_matches_block_structure():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a, b = random_complex(rng), random_complex(rng)
        expected = np.block(
            [[a[0, 0] * b, a[0, 1] * b], [a[1, 0] * b, a[1, 1] * b]]
        )
        np.testing.assert_allclose(kron(a, b), expected, rtol=0, atol=0)


def test_kron_mixed_product():
    rng = np.random.default_rng(12)
    for _ in range(50):
        a, b, c, d = (random_complex(rng) for _ in range(4))
        np.testing.assert_allclose(
            kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-13
        )


def test_kron_sigma_y_pair_is_real_antidiagonal():
    k = kron(SIGMA_Y, SIGMA_Y)
    expected = np.zeros((4, 4))
    expected[0, 3], expected[1, 2], expected[2, 1], expected[3, 0] = -1, 1, 1, -1
    np.testing.assert_allclose(k, expected, atol=0)


def test_kron_rejects_wrong_shapes():
    with pytest.raises(ValueError):
        kron(np.eye(3), np.eye(2))
    with pytest.raises(ValueError):
        kron(np.eye(2), np.ones((2, 3)))


def test_dagger():
    rng = np.random.default_rng(13)
    a = random_complex(rng, 4)
    np.testing.assert_allclose(dagger(a), a.conj().T, atol=0)


def test_hermitian_eig_reconstruction_and_order():
    rng = np.random.default_rng(14)
    for _ in range(50):
        g = random_complex(rng, 4)
        h = g + dagger(g)
        dec = hermitian_eig(h)
        assert isinstance(dec, EigDecomposition)
        w, v = dec.eigenvalues, dec.eigenvectors
        assert np.all(np.diff(w) <= 0)
        np.testing.assert_allclose((v * w) @ dagger(v), h, atol=1e-10)
        np.testing.assert_allclose(dagger(v) @ v, np.eye(4), atol=1e-10)


def test_hermitian_eig_rejects_non_hermitian():
    m = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        hermitian_eig(m)


def test_x_matrix_spectrum():
    # central block [[0.4, 0.2], [0.2, 0.4]] contributes 0.6 and 0.2,
    # the outer diagonal contributes 0.1 twice
    rho = x_state(XStateParams(0.1, 0.4, 0.4, 0.1, 0.2))
    dec = hermitian_eig(rho)
    np.testing.assert_allclose(dec.eigenvalues, [0.6, 0.2, 0.1, 0.1], atol=1e-12)


def test_psd_sqrt_roundtrip_full_rank():
    rng = np.random.default_rng(15)
    for _ in range(50):
        g = random_complex(rng, 4)
        h = g @ dagger(g)
        h /= np.trace(h).real
        s = psd_sqrt(h)
        np.testing.assert_allclose(s @ s, h, atol=1e-9)
        np.testing.assert_allclose(s, dagger(s), atol=1e-12)


def test_psd_sqrt_rank_deficient():
    rng = np.random.default_rng(16)
    for rank in (1, 2, 3):
        g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
        h = g @ g.conj().T
        h /= np.trace(h).real
        s = psd_sqrt(h)
        np.testing.assert_allclose(s @ s, h, atol=1e-9)
        # the null space must stay a null space, not pick up noise
        assert np.linalg.matrix_rank(s, tol=1e-10) == rank


def test_psd_sqrt_projector_is_fixed_point():
    v = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2)
    p = np.outer(v, v.conj())
    np.testing.assert_allclose(psd_sqrt(p), p, atol=1e-14)


def test_psd_sqrt_rejects_negative_eigenvalue():
    h = np.diag([0.7, 0.4, -1e-3, 0.0])
    with pytest.raises(ValueError):
        psd_sqrt(h)


def test_psd_sqrt_clamps_rounding_negatives():
    h = np.diag([1.0, 0.5, 0.0, -1e-14])
    s = psd_sqrt(h)
    assert s[3, 3] == 0.0
