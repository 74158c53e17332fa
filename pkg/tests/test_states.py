import numpy as np
import pytest

from esdsim.states import (
    Family,
    FamilyParams,
    PureStateParams,
    XStateParams,
    as_x_params,
    family_state,
    isotropic,
    pure_state,
    validate_density_matrix,
    werner,
    x_state,
)


def test_x_params_validation():
    XStateParams(0.1, 0.4, 0.4, 0.1, 0.2)
    with pytest.raises(ValueError):
        XStateParams(-0.1, 0.5, 0.5, 0.1, 0.0)
    with pytest.raises(ValueError):
        XStateParams(0.1, 0.4, 0.4, 0.2, 0.0)  # sums to 1.1
    with pytest.raises(ValueError):
        XStateParams(0.1, 0.4, 0.4, 0.1, 0.5)  # |z|^2 > b c


def test_x_params_accepts_complex_coherence():
    p = XStateParams(0.1, 0.4, 0.4, 0.1, 0.1 + 0.1j)
    rho = x_state(p)
    assert rho[1, 2] == 0.1 + 0.1j
    assert rho[2, 1] == 0.1 - 0.1j


def test_pure_params_validation():
    PureStateParams(0.25, 0.25, 0.25, 0.25)
    with pytest.raises(ValueError):
        PureStateParams(0.5, 0.5, 0.5, -0.5)
    with pytest.raises(ValueError):
        PureStateParams(0.5, 0.5, 0.5, 0.5)


def test_family_params_validation():
    FamilyParams(Family.WERNER, 0.0)
    FamilyParams(Family.ISOTROPIC, 1.0)
    with pytest.raises(ValueError):
        FamilyParams(Family.WERNER, 1.5)
    with pytest.raises(ValueError):
        FamilyParams(Family.ISOTROPIC, -0.1)


def test_x_state_layout():
    rho = x_state(XStateParams(0.1, 0.4, 0.4, 0.1, 0.2))
    np.testing.assert_allclose(np.diagonal(rho), [0.1, 0.4, 0.4, 0.1])
    assert rho[1, 2] == 0.2
    # all other off-diagonal entries vanish
    mask = np.ones((4, 4), dtype=bool)
    for i, j in ((0, 0), (1, 1), (2, 2), (3, 3), (1, 2), (2, 1)):
        mask[i, j] = False
    assert np.all(rho[mask] == 0)
    validate_density_matrix(rho)


def test_pure_state_is_rank_one_with_given_weights():
    params = PureStateParams(0.125, 0.375, 0.375, 0.125, 0.3, 1.1, 2.0)
    rho = pure_state(params)
    validate_density_matrix(rho)
    np.testing.assert_allclose(np.trace(rho @ rho).real, 1.0, atol=1e-12)
    np.testing.assert_allclose(
        np.diagonal(rho).real, [0.125, 0.375, 0.375, 0.125], atol=1e-12
    )


def test_pure_state_phases_enter_coherences():
    params = PureStateParams(0.25, 0.25, 0.25, 0.25, 0.7, 0.2, 1.5)
    rho = pure_state(params)
    # entry (1, 2) is sqrt(b c) e^{i(f - g)}
    np.testing.assert_allclose(rho[1, 2], 0.25 * np.exp(1j * 0.5), atol=1e-12)
    np.testing.assert_allclose(rho[0, 3], 0.25 * np.exp(-1j * 1.5), atol=1e-12)


def test_isotropic_special_points():
    # x = 1/4 is the maximally mixed state
    np.testing.assert_allclose(isotropic(0.25), np.eye(4) / 4, atol=1e-15)
    # x = 1 is a maximally entangled projector
    rho = isotropic(1.0)
    np.testing.assert_allclose(np.trace(rho @ rho).real, 1.0, atol=1e-12)
    np.testing.assert_allclose(np.diagonal(rho).real, [0, 0.5, 0.5, 0], atol=1e-15)
    np.testing.assert_allclose(rho[1, 2], 0.5, atol=1e-15)


def test_werner_special_points():
    np.testing.assert_allclose(werner(0.0), np.eye(4) / 4, atol=1e-15)
    rho = werner(1.0)
    np.testing.assert_allclose(np.trace(rho @ rho).real, 1.0, atol=1e-12)
    np.testing.assert_allclose(np.diagonal(rho).real, [0, 0.5, 0.5, 0], atol=1e-15)
    np.testing.assert_allclose(rho[1, 2], -0.5, atol=1e-15)


def test_family_states_are_valid_across_range():
    for x in np.linspace(0.0, 1.0, 21):
        validate_density_matrix(isotropic(x))
        validate_density_matrix(werner(x))


def test_family_state_dispatch():
    np.testing.assert_allclose(
        family_state(FamilyParams(Family.ISOTROPIC, 0.3)), isotropic(0.3), atol=0
    )
    np.testing.assert_allclose(
        family_state(FamilyParams(Family.WERNER, 0.7)), werner(0.7), atol=0
    )


def test_validate_density_matrix_rejects():
    with pytest.raises(ValueError, match="[Hh]ermitian"):
        validate_density_matrix(np.array([[0.5, 0.5], [0.0, 0.5]]))
    with pytest.raises(ValueError, match="trace"):
        validate_density_matrix(np.eye(4))
    neg = np.diag([1.2, -0.2, 0.0, 0.0])
    with pytest.raises(ValueError):
        validate_density_matrix(neg)


def test_as_x_params_roundtrip():
    rng = np.random.default_rng(21)
    for _ in range(100):
        a, b, c, d = rng.dirichlet(np.ones(4))
        z = rng.uniform() * np.sqrt(b * c) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        params = XStateParams(a, b, c, d, z)
        back = as_x_params(x_state(params))
        np.testing.assert_allclose(
            [back.a, back.b, back.c, back.d], [a, b, c, d], atol=1e-14
        )
        np.testing.assert_allclose(back.z, z, atol=1e-14)


def test_as_x_params_rejects_corner_coherence():
    phi = np.zeros(4)
    phi[0] = phi[3] = 1 / np.sqrt(2)
    rho = np.outer(phi, phi)
    with pytest.raises(ValueError, match=r"\(0, 3\)"):
        as_x_params(rho)


def test_as_x_params_rejects_single_qubit_input():
    with pytest.raises(ValueError):
        as_x_params(np.eye(2) / 2)
