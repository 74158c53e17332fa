import numpy as np
import pytest

from esdsim.channels import (
    KrausSet,
    NoiseKind,
    NoiseSpec,
    amplitude_kraus,
    apply_channel,
    completeness_residual,
    depolarizing_kraus,
    kraus_for,
    lift_first,
    phase_kraus,
    _reduced_first_qubit,
    _reduced_second_qubit,
)
from esdsim.states import XStateParams, as_x_params, x_state


def ginibre(rng, dim=4):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def test_amplitude_kraus_entries():
    eta = 0.6
    k = amplitude_kraus(eta)
    np.testing.assert_allclose(k.ops[0], [[0.6, 0], [0, 1]], atol=0)
    np.testing.assert_allclose(k.ops[1], [[0, 0], [0.8, 0]], atol=1e-15)


def test_phase_kraus_entries():
    gamma = 0.6
    k = phase_kraus(gamma)
    np.testing.assert_allclose(k.ops[0], [[1, 0], [0, 0.6]], atol=0)
    np.testing.assert_allclose(k.ops[1], [[0, 0], [0, 0.8]], atol=1e-15)


def test_depolarizing_kraus_entries():
    k = depolarizing_kraus(0.3)
    w = np.sqrt(0.1)
    np.testing.assert_allclose(k.ops[0], np.sqrt(0.7) * np.eye(2), atol=1e-15)
    np.testing.assert_allclose(k.ops[1], w * np.array([[0, 1], [1, 0]]), atol=1e-15)
    np.testing.assert_allclose(k.ops[2], w * np.array([[0, 1j], [-1j, 0]]), atol=1e-15)
    np.testing.assert_allclose(k.ops[3], w * np.array([[1, 0], [0, -1]]), atol=1e-15)


@pytest.mark.parametrize("ctor", [amplitude_kraus, phase_kraus, depolarizing_kraus])
def test_constructors_complete_over_parameter_range(ctor):
    rng = np.random.default_rng(31)
    for value in np.concatenate(([0.0, 1.0], rng.uniform(size=100))):
        assert completeness_residual(ctor(float(value))) <= 1e-14


@pytest.mark.parametrize("ctor", [amplitude_kraus, phase_kraus, depolarizing_kraus])
@pytest.mark.parametrize("bad", [-0.1, 1.1])
def test_constructors_reject_out_of_range(ctor, bad):
    with pytest.raises(ValueError):
        ctor(bad)


def test_kraus_for_dispatch():
    np.testing.assert_allclose(
        kraus_for(NoiseKind.AMPLITUDE, 0.5).ops[0], amplitude_kraus(0.5).ops[0]
    )
    assert kraus_for(NoiseKind.PHASE, 0.5).label == "phase"
    assert kraus_for(NoiseKind.DEPOLARIZING, 0.5).label == "depolarizing"


def test_noise_spec_rejects_nonpositive_rate():
    NoiseSpec(NoiseKind.PHASE, 2.0)
    with pytest.raises(ValueError):
        NoiseSpec(NoiseKind.PHASE, 0.0)
    with pytest.raises(ValueError):
        NoiseSpec(NoiseKind.PHASE, -1.0)


def test_krausset_shape_checks():
    with pytest.raises(ValueError):
        KrausSet((np.eye(2), np.eye(3)))
    with pytest.raises(ValueError):
        KrausSet((np.ones((2, 3)),))
    with pytest.raises(ValueError):
        KrausSet(())  # empty needs an explicit dim


def test_completeness_residual_examples():
    # scaled identity: sum K^dag K - I = -0.19 I, Frobenius norm 0.19 sqrt(2)
    k = KrausSet((0.9 * np.eye(2),))
    np.testing.assert_allclose(completeness_residual(k), 0.19 * np.sqrt(2), atol=1e-14)
    # empty set: residual is ||-I||_F = sqrt(dim)
    empty = KrausSet((), dim=4)
    np.testing.assert_allclose(completeness_residual(empty), 2.0, atol=0)


def test_lift_first_structure():
    lifted = lift_first(amplitude_kraus(0.7))
    assert lifted.dim == 4
    np.testing.assert_allclose(lifted.ops[0], np.kron([[0.7, 0], [0, 1]], np.eye(2)))
    assert completeness_residual(lifted) <= 1e-14


def test_lift_first_rejects_bad_input():
    with pytest.raises(ValueError):
        lift_first(KrausSet((np.eye(4),)))
    with pytest.raises(ValueError):
        lift_first(KrausSet((0.9 * np.eye(2),)))  # incomplete


def test_apply_channel_preserves_trace_and_positivity():
    rng = np.random.default_rng(32)
    for _ in range(100):
        rho = ginibre(rng)
        kind = (NoiseKind.AMPLITUDE, NoiseKind.PHASE, NoiseKind.DEPOLARIZING)[
            rng.integers(3)
        ]
        out = apply_channel(rho, lift_first(kraus_for(kind, rng.uniform())))
        np.testing.assert_allclose(np.trace(out).real, 1.0, atol=1e-10)
        assert np.linalg.eigvalsh(out).min() >= -1e-10
        np.testing.assert_allclose(out, out.conj().T, atol=1e-12)


def test_apply_channel_identity_limits():
    rng = np.random.default_rng(33)
    rho = ginibre(rng)
    for kind, value in [
        (NoiseKind.AMPLITUDE, 1.0),
        (NoiseKind.PHASE, 1.0),
        (NoiseKind.DEPOLARIZING, 0.0),
    ]:
        out = apply_channel(rho, lift_first(kraus_for(kind, value)))
        np.testing.assert_allclose(out, rho, atol=1e-15)


def test_apply_channel_rejects_incomplete_set():
    rho = np.eye(4) / 4
    with pytest.raises(ValueError, match="not complete"):
        apply_channel(rho, KrausSet((0.9 * np.eye(4),)))


def test_apply_channel_rejects_shape_mismatch():
    with pytest.raises(ValueError, match="shape"):
        apply_channel(np.eye(2) / 2, lift_first(phase_kraus(0.5)))


def test_amplitude_moves_population_down():
    # pure |00> decays toward |10> on the first qubit: a -> a eta^2,
    # c -> c + (1 - eta^2) a, coherence z -> eta z
    params = XStateParams(0.1, 0.4, 0.4, 0.1, 0.2)
    eta = 0.7
    out = apply_channel(x_state(params), lift_first(amplitude_kraus(eta)))
    back = as_x_params(out)
    e2 = eta * eta
    np.testing.assert_allclose(back.a, 0.1 * e2, atol=1e-15)
    np.testing.assert_allclose(back.b, 0.4 * e2, atol=1e-15)
    np.testing.assert_allclose(back.c, 0.4 + (1 - e2) * 0.1, atol=1e-15)
    np.testing.assert_allclose(back.d, 0.1 + (1 - e2) * 0.4, atol=1e-15)
    np.testing.assert_allclose(back.z, eta * 0.2, atol=1e-15)


def test_phase_scales_coherence_only():
    params = XStateParams(0.2, 0.3, 0.3, 0.2, 0.25j)
    gamma = 0.4
    out = apply_channel(x_state(params), lift_first(phase_kraus(gamma)))
    back = as_x_params(out)
    np.testing.assert_allclose(
        [back.a, back.b, back.c, back.d], [0.2, 0.3, 0.3, 0.2], atol=1e-15
    )
    np.testing.assert_allclose(back.z, gamma * 0.25j, atol=1e-15)


def test_depolarizing_mixes_toward_swap_and_scales_coherence():
    # diagonal moves as w -> w + (2p/3)(partner - w); z picks up (3-4p)/3
    params = XStateParams(0.1, 0.4, 0.4, 0.1, 0.2)
    p = 0.3
    out = apply_channel(x_state(params), lift_first(depolarizing_kraus(p)))
    back = as_x_params(out)
    np.testing.assert_allclose(back.a, 0.1 + (2 * p / 3) * (0.4 - 0.1), atol=1e-15)
    np.testing.assert_allclose(back.d, 0.1 + (2 * p / 3) * (0.4 - 0.1), atol=1e-15)
    np.testing.assert_allclose(back.z, 0.2 * (3 - 4 * p) / 3, atol=1e-15)


def test_noise_on_first_qubit_leaves_second_marginal():
    rng = np.random.default_rng(34)
    for _ in range(50):
        rho = ginibre(rng)
        kind = (NoiseKind.AMPLITUDE, NoiseKind.PHASE, NoiseKind.DEPOLARIZING)[
            rng.integers(3)
        ]
        out = apply_channel(rho, lift_first(kraus_for(kind, rng.uniform())))
        np.testing.assert_allclose(
            _reduced_second_qubit(out), _reduced_second_qubit(rho), atol=1e-12
        )


def test_partial_trace_helpers_are_consistent():
    rng = np.random.default_rng(35)
    rho = ginibre(rng)
    r1 = _reduced_first_qubit(rho)
    r2 = _reduced_second_qubit(rho)
    np.testing.assert_allclose(np.trace(r1).real, 1.0, atol=1e-12)
    np.testing.assert_allclose(np.trace(r2).real, 1.0, atol=1e-12)
    # product input factors exactly
    u = np.diag([0.7, 0.3]).astype(complex)
    v = np.array([[0.5, 0.2], [0.2, 0.5]], dtype=complex)
    prod = np.kron(u, v)
    np.testing.assert_allclose(_reduced_first_qubit(prod), u, atol=1e-15)
    np.testing.assert_allclose(_reduced_second_qubit(prod), v, atol=1e-15)
