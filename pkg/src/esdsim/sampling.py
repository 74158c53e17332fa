"""Seeded random generators for states, channels and scenarios.

Everything takes an explicit numpy Generator so property suites and tests
stay reproducible.  Entangled variants resample until the initial
concurrence clears a floor; without it, states sampled arbitrarily close
to the separable boundary make death-time assertions meaningless.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .channels import NoiseKind, NoiseSpec
from .concurrence import concurrence_pure, concurrence_x
from .dynamics import Scenario
from .states import Family, FamilyParams, PureStateParams, XStateParams

# Initial-concurrence floor for the "entangled" samplers.
MIN_CONCURRENCE = 0.01

NOISE_KINDS = (NoiseKind.AMPLITUDE, NoiseKind.PHASE, NoiseKind.DEPOLARIZING)


def random_x_params(rng: np.random.Generator) -> XStateParams:
    """Cross-pattern parameters with the coherence bound satisfied.

    Weights come from a flat Dirichlet; |z| is a uniform fraction of its
    maximum sqrt(b c), so the whole admissible wedge is covered.
    """
    a, b, c, d = rng.dirichlet(np.ones(4))
    mag = rng.uniform() * math.sqrt(b * c)
    z = mag * cmath.exp(1.0j * rng.uniform(0.0, 2.0 * math.pi))
    return XStateParams(a, b, c, d, z)


def random_entangled_x_params(
    rng: np.random.Generator, min_c: float = MIN_CONCURRENCE
) -> XStateParams:
    while True:
        params = random_x_params(rng)
        if concurrence_x(params) >= min_c:
            return params


def random_pure_params(rng: np.random.Generator) -> PureStateParams:
    a, b, c, d = rng.dirichlet(np.ones(4))
    f, g, h = rng.uniform(0.0, 2.0 * math.pi, size=3)
    return PureStateParams(a, b, c, d, f, g, h)


def random_entangled_pure_params(
    rng: np.random.Generator, min_c: float = MIN_CONCURRENCE
) -> PureStateParams:
    while True:
        params = random_pure_params(rng)
        if concurrence_pure(params) >= min_c:
            return params


def random_family_params(rng: np.random.Generator) -> FamilyParams:
    family = Family.ISOTROPIC if rng.uniform() < 0.5 else Family.WERNER
    return FamilyParams(family, rng.uniform())


def haar_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre matrix, phases fixed."""
    g = rng.standard_normal((dim, dim)) + 1.0j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    # normalize R's diagonal phases, otherwise QR is not Haar
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def ginibre_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Full-rank random density matrix G G^dag / tr."""
    g = rng.standard_normal((dim, dim)) + 1.0j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_noise_kind(rng: np.random.Generator) -> NoiseKind:
    return NOISE_KINDS[rng.integers(len(NOISE_KINDS))]


def random_noise_value(rng: np.random.Generator, kind: NoiseKind) -> float:
    # eta, gamma and p all live on [0, 1]
    return float(rng.uniform())


def random_scenario(rng: np.random.Generator, index: int | None = None) -> Scenario:
    """One random scenario; `index` cycles kinds so a sample of n covers
    every (state kind, noise) pair about evenly."""
    if index is None:
        index = int(rng.integers(12))
    state_pick = index % 4
    noise = NoiseSpec(NOISE_KINDS[(index // 4) % 3])
    if state_pick == 0:
        return Scenario(random_x_params(rng), noise)
    if state_pick == 1:
        return Scenario(random_pure_params(rng), noise)
    if state_pick == 2:
        return Scenario(FamilyParams(Family.ISOTROPIC, rng.uniform()), noise)
    return Scenario(FamilyParams(Family.WERNER, rng.uniform()), noise)
