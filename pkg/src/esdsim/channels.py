"""Kraus representations of the three single-qubit noises and their lifts.

The noise always acts on the first qubit only; `lift_first` turns a 2x2
Kraus set into the 4x4 set {K x I} and `apply_channel` evaluates the Kraus
sum.  Channel parameters are the decayed coherence factors eta (amplitude),
gamma (phase) and the error probability p (depolarizing); the time
parametrization of these lives in the dynamics module.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import dagger, kron
from .states import validate_density_matrix

# What the constructors achieve (exact algebra, rounding only).
CONSTRUCTOR_COMPLETENESS_TOL = 1e-14
# Gate applied by apply_channel / lift_first on arbitrary Kraus sets.
COMPLETENESS_TOL = 1e-10
# Agreement tolerance for the qubit-2 marginal checks.
MARGINAL_TOL = 1e-12


class NoiseKind(enum.Enum):
    AMPLITUDE = "amplitude"
    PHASE = "phase"
    DEPOLARIZING = "depolarizing"


@dataclass(frozen=True)
class NoiseSpec:
    """Which single-qubit noise acts, and its decay rate (inverse time)."""

    kind: NoiseKind
    rate: float = 1.0

    def __post_init__(self) -> None:
        if self.rate <= 0:
            raise ValueError(f"decay rate must be positive, got {self.rate!r}")


@dataclass(frozen=True)
class KrausSet:
    """Ordered Kraus operators, all square of the same dimension.

    `dim` is inferred from the operators; it must be given explicitly for an
    empty set (where the completeness residual is ||-I||_F = sqrt(dim)).
    """

    ops: tuple[np.ndarray, ...]
    label: str = "custom"
    dim: int = field(default=0)

    def __post_init__(self) -> None:
        ops = tuple(np.asarray(op, dtype=complex) for op in self.ops)
        dims = {op.shape for op in ops}
        if any(len(shape) != 2 or shape[0] != shape[1] for shape in dims):
            raise ValueError("Kraus operators must be square matrices")
        if len(dims) > 1:
            raise ValueError(f"Kraus operators must share one dimension, got {dims}")
        dim = ops[0].shape[0] if ops else self.dim
        if dim <= 0:
            raise ValueError("an empty KrausSet needs an explicit dim")
        for op in ops:
            op.setflags(write=False)
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "dim", dim)


def amplitude_kraus(eta: float) -> KrausSet:
    """Amplitude-noise pair: E0 = diag(eta, 1), E1 with sqrt(1-eta^2) at (1, 0)."""
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta must lie in [0, 1], got {eta!r}")
    e0 = np.array([[eta, 0.0], [0.0, 1.0]], dtype=complex)
    e1 = np.array([[0.0, 0.0], [math.sqrt(1.0 - eta * eta), 0.0]], dtype=complex)
    return KrausSet((e0, e1), label="amplitude")


def phase_kraus(gamma: float) -> KrausSet:
    """Phase-noise pair: K0 = diag(1, gamma), K1 = diag(0, sqrt(1-gamma^2))."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma!r}")
    k0 = np.diag([1.0, gamma]).astype(complex)
    k1 = np.diag([0.0, math.sqrt(1.0 - gamma * gamma)]).astype(complex)
    return KrausSet((k0, k1), label="phase")


def depolarizing_kraus(p: float) -> KrausSet:
    """Depolarizing quadruple sqrt(1-p) I and sqrt(p/3) times each Pauli."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    w = math.sqrt(p / 3.0)
    d1 = math.sqrt(1.0 - p) * np.eye(2, dtype=complex)
    d2 = w * np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    d3 = w * np.array([[0.0, 1.0j], [-1.0j, 0.0]], dtype=complex)
    d4 = w * np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    return KrausSet((d1, d2, d3, d4), label="depolarizing")


def kraus_for(kind: NoiseKind, value: float) -> KrausSet:
    """Constructor dispatch on the noise kind."""
    if kind is NoiseKind.AMPLITUDE:
        return amplitude_kraus(value)
    if kind is NoiseKind.PHASE:
        return phase_kraus(value)
    return depolarizing_kraus(value)


def completeness_residual(kraus: KrausSet) -> float:
    """Frobenius norm of sum(K^dag K) - I; zero for a trace-preserving set."""
    acc = -np.eye(kraus.dim, dtype=complex)
    for op in kraus.ops:
        acc = acc + dagger(op) @ op
    return float(np.linalg.norm(acc))


def lift_first(kraus: KrausSet, tol: float = COMPLETENESS_TOL) -> KrausSet:
    """Lift a 2x2 Kraus set to act on the first qubit of a pair: K -> K x I."""
    if kraus.dim != 2:
        raise ValueError(f"lift_first expects 2x2 operators, got dim {kraus.dim}")
    residual = completeness_residual(kraus)
    if residual > tol:
        raise ValueError(f"input Kraus set is not complete: residual {residual:.3e}")
    eye = np.eye(2, dtype=complex)
    return KrausSet(tuple(kron(op, eye) for op in kraus.ops), label=kraus.label, dim=4)


def apply_channel(rho: np.ndarray, kraus: KrausSet, tol: float = COMPLETENESS_TOL) -> np.ndarray:
    """Kraus sum sum(K rho K^dag); the output is validated as a density matrix."""
    residual = completeness_residual(kraus)
    if residual > tol:
        raise ValueError(f"Kraus set is not complete: residual {residual:.3e}")
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (kraus.dim, kraus.dim):
        raise ValueError(f"state shape {rho.shape} does not match Kraus dim {kraus.dim}")
    out = np.zeros_like(rho)
    for op in kraus.ops:
        out += op @ rho @ dagger(op)
    return validate_density_matrix(out)


def _reduced_second_qubit(rho: np.ndarray) -> np.ndarray:
    # partial trace over qubit 1; internal, used by the marginal property checks
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("ijil->jl", r)


def _reduced_first_qubit(rho: np.ndarray) -> np.ndarray:
    # partial trace over qubit 2
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("ijkj->ik", r)
