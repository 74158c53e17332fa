"""Entanglement dynamics under a single local noise.

Everything here works in the dimensionless time tau (decay rate times
physical time).  The noise parameter at time tau is eta = e^(-tau/2) for
amplitude noise, gamma = e^(-tau/2) for phase noise and p = 1 - e^(-tau/2)
for depolarizing noise.

Two evaluation routes are kept deliberately separate so they can check
each other: `closed_form_concurrence` dispatches over the per-family
formulas, while `numeric_trajectory` rebuilds each point from scratch
(construct the state, lift the Kraus set, apply it, run the general
concurrence).  ESD detection likewise comes in an analytic flavor (where
a closed threshold exists) and a scan-plus-bisection flavor that only
needs pointwise concurrence values.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .channels import NoiseKind, NoiseSpec, apply_channel, kraus_for, lift_first
from .concurrence import concurrence_pure, concurrence_wootters
from .states import (
    Family,
    FamilyParams,
    PureStateParams,
    XStateParams,
    family_state,
    pure_state,
    x_state,
)

DEFAULT_TAU_MAX = 50.0
DEFAULT_BISECTION_TOL = 1e-9
SCAN_POINTS = 2048
# Numeric-route concurrences carry rounding noise; below this they count
# as zero.  Closed forms clamp through max(0, .) and are compared to 0.0
# exactly, which keeps barely-alive asymptotic tails (order 1e-13 near the
# scan horizon) out of the dead bucket.
ZERO_CONCURRENCE_TOL = 1e-12
TRAJECTORY_CAP = 1.0 + 1e-10

StateParams = Union[XStateParams, PureStateParams, FamilyParams]


class TrajectorySource(enum.Enum):
    CLOSED_FORM = "ClosedForm"
    NUMERIC = "Numeric"


class Classification(enum.Enum):
    SUDDEN_DEATH = "SuddenDeath"
    ASYMPTOTIC_DECAY = "AsymptoticDecay"
    INITIALLY_SEPARABLE = "InitiallySeparable"


class EsdMethod(enum.Enum):
    ANALYTIC = "Analytic"
    BISECTION = "Bisection"


@dataclass(frozen=True)
class Scenario:
    """One initial state plus the single local noise acting on qubit 1."""

    state: StateParams
    noise: NoiseSpec


@dataclass(frozen=True)
class Trajectory:
    tau: np.ndarray
    c: np.ndarray
    source: TrajectorySource

    def __post_init__(self) -> None:
        tau = np.asarray(self.tau, dtype=float)
        c = np.asarray(self.c, dtype=float)
        if tau.ndim != 1 or c.ndim != 1 or tau.size != c.size:
            raise ValueError("tau and c must be 1-d arrays of equal length")
        if tau.size and np.any(np.diff(tau) <= 0):
            raise ValueError("tau grid must be strictly increasing")
        if c.size and (c.min() < 0.0 or c.max() > TRAJECTORY_CAP):
            raise ValueError("concurrence values must lie in [0, 1]")
        tau.setflags(write=False)
        c.setflags(write=False)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "c", c)


@dataclass(frozen=True)
class EsdResult:
    """Decay classification, with the death time when there is one.

    `horizon` records the finite scan window for bisection results; an
    AsymptoticDecay from the scan route only asserts survival up to it.
    """

    classification: Classification
    method: EsdMethod
    tau_death: float | None = None
    horizon: float | None = None

    def __post_init__(self) -> None:
        has_death = self.tau_death is not None
        if has_death != (self.classification is Classification.SUDDEN_DEATH):
            raise ValueError("tau_death must be present exactly for SuddenDeath")
        if has_death and not self.tau_death > 0.0:
            raise ValueError(f"tau_death must be positive, got {self.tau_death!r}")


def noise_param(noise: NoiseSpec, tau: float) -> float:
    """eta, gamma or p at dimensionless time tau, per the noise kind."""
    if tau < 0.0:
        raise ValueError(f"tau must be nonnegative, got {tau!r}")
    if noise.kind is NoiseKind.DEPOLARIZING:
        return -math.expm1(-0.5 * tau)
    return math.exp(-0.5 * tau)


def initial_state(scenario: Scenario) -> np.ndarray:
    state = scenario.state
    if isinstance(state, XStateParams):
        return x_state(state)
    if isinstance(state, PureStateParams):
        return pure_state(state)
    return family_state(state)


def initial_concurrence(scenario: Scenario) -> float:
    return closed_form_concurrence(scenario, 0.0)


# ---------------------------------------------------------------------------
# closed forms


def _x_amplitude(s: XStateParams, eta: float) -> float:
    radicand = s.a * (s.b + s.d - s.b * eta * eta)
    return 2.0 * max(0.0, eta * (abs(s.z) - math.sqrt(radicand)))


def _x_phase(s: XStateParams, gamma: float) -> float:
    return 2.0 * max(0.0, gamma * abs(s.z) - math.sqrt(s.a * s.d))


def _x_depolarizing(s: XStateParams, p: float) -> float:
    # coherence magnitude carries |3-4p|; the radicand factors stay
    # nonnegative on p in [0, 1]
    radicand = (3.0 * s.a + 2.0 * p * (s.c - s.a)) * (3.0 * s.d + 2.0 * p * (s.b - s.d))
    return (2.0 / 3.0) * max(0.0, abs(3.0 - 4.0 * p) * abs(s.z) - math.sqrt(radicand))


def _pure_depolarizing_factor(tau: float) -> float:
    # the coherence factor 2 e^(-tau/2) - 1 changes sign at tau = 2 ln 2;
    # past that point the state stays separable (checked against the
    # general route in the property suites), so the clamp sits here and
    # not an absolute value
    return max(0.0, 2.0 * math.exp(-0.5 * tau) - 1.0)


def _isotropic_amplitude(x: float, eta: float) -> float:
    radicand = 2.0 * (1.0 - x) * (3.0 - (1.0 + 2.0 * x) * eta * eta)
    return (eta / 3.0) * max(0.0, (4.0 * x - 1.0) - math.sqrt(radicand))


def _isotropic_phase(x: float, gamma: float) -> float:
    return (1.0 / 3.0) * max(0.0, (4.0 * x - 1.0) * gamma - 2.0 * (1.0 - x))


def _isotropic_depolarizing(x: float, p: float) -> float:
    return (1.0 / 3.0) * max(0.0, 2.0 * p * (1.0 - 4.0 * x) + 6.0 * x - 3.0)


def _werner_amplitude(x: float, eta: float) -> float:
    radicand = (1.0 - x) * (2.0 - (1.0 + x) * eta * eta)
    return (eta / 2.0) * max(0.0, 2.0 * x - math.sqrt(radicand))


def _werner_phase(x: float, gamma: float) -> float:
    return 0.5 * max(0.0, 2.0 * x * gamma - (1.0 - x))


def _werner_depolarizing(x: float, p: float) -> float:
    return (1.0 / 6.0) * max(0.0, 2.0 * (3.0 - 4.0 * p) * x - (3.0 + (4.0 * p - 3.0) * x))


def closed_form_concurrence(scenario: Scenario, tau: float) -> float:
    """Evolved concurrence from the formula matching (state kind, noise)."""
    state = scenario.state
    kind = scenario.noise.kind
    value = noise_param(scenario.noise, tau)

    if isinstance(state, XStateParams):
        if kind is NoiseKind.AMPLITUDE:
            return _x_amplitude(state, value)
        if kind is NoiseKind.PHASE:
            return _x_phase(state, value)
        return _x_depolarizing(state, value)

    if isinstance(state, PureStateParams):
        c0 = concurrence_pure(state)
        if kind is NoiseKind.DEPOLARIZING:
            return _pure_depolarizing_factor(tau) * c0
        return value * c0

    x = state.x
    if state.family is Family.ISOTROPIC:
        if kind is NoiseKind.AMPLITUDE:
            return _isotropic_amplitude(x, value)
        if kind is NoiseKind.PHASE:
            return _isotropic_phase(x, value)
        return _isotropic_depolarizing(x, value)
    if kind is NoiseKind.AMPLITUDE:
        return _werner_amplitude(x, value)
    if kind is NoiseKind.PHASE:
        return _werner_phase(x, value)
    return _werner_depolarizing(x, value)


# ---------------------------------------------------------------------------
# trajectories


def _validate_grid(tau_grid) -> np.ndarray:
    grid = np.asarray(tau_grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("tau grid must be a nonempty 1-d array")
    if grid[0] < 0.0:
        raise ValueError("tau grid must be nonnegative")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("tau grid must be strictly increasing")
    return grid


def closed_form_trajectory(scenario: Scenario, tau_grid) -> Trajectory:
    grid = _validate_grid(tau_grid)
    c = np.array([closed_form_concurrence(scenario, t) for t in grid])
    return Trajectory(grid, c, TrajectorySource.CLOSED_FORM)


def numeric_trajectory(scenario: Scenario, tau_grid) -> Trajectory:
    """General-route trajectory: evolve the initial state, then Wootters.

    Each grid point applies the channel at parameter(tau) to the initial
    state.  For these noise families that one-shot form equals composing
    increments (eta and gamma multiply; p is defined through e^(-tau/2)),
    so no stepping is needed.
    """
    grid = _validate_grid(tau_grid)
    rho0 = initial_state(scenario)
    kind = scenario.noise.kind
    c = np.empty(grid.size)
    for i, t in enumerate(grid):
        lifted = lift_first(kraus_for(kind, noise_param(scenario.noise, t)))
        c[i] = concurrence_wootters(apply_channel(rho0, lifted))
    return Trajectory(grid, c, TrajectorySource.NUMERIC)


def evolved_state(scenario: Scenario, tau: float) -> np.ndarray:
    """The state at time tau on the numeric route (initial state evolved)."""
    lifted = lift_first(kraus_for(scenario.noise.kind, noise_param(scenario.noise, tau)))
    return apply_channel(initial_state(scenario), lifted)


# ---------------------------------------------------------------------------
# ESD detection


def _analytic_x(state: XStateParams, kind: NoiseKind) -> EsdResult:
    az = abs(state.z)
    if kind is NoiseKind.AMPLITUDE:
        denom = state.a * (state.b + state.d) - az * az
        if denom <= 0.0:
            # covers a = 0 as well: the threshold expression degenerates
            # but the concurrence stays positive for all finite tau
            return EsdResult(Classification.ASYMPTOTIC_DECAY, EsdMethod.ANALYTIC)
        tau = math.log(state.a * state.b / denom)
        return EsdResult(Classification.SUDDEN_DEATH, EsdMethod.ANALYTIC, tau_death=tau)
    if kind is NoiseKind.PHASE:
        ad = state.a * state.d
        if ad == 0.0:
            return EsdResult(Classification.ASYMPTOTIC_DECAY, EsdMethod.ANALYTIC)
        tau = math.log(az * az / ad)
        return EsdResult(Classification.SUDDEN_DEATH, EsdMethod.ANALYTIC, tau_death=tau)
    raise ValueError(
        "no closed-form death time for cross-pattern states under depolarizing "
        "noise; use esd_time_bisection"
    )


def _analytic_family(state: FamilyParams, kind: NoiseKind) -> EsdResult:
    x = state.x
    if kind is NoiseKind.AMPLITUDE:
        raise ValueError(
            f"no closed-form death time for the {state.family.value} family under "
            "amplitude noise; use esd_time_bisection"
        )
    if state.family is Family.ISOTROPIC:
        if kind is NoiseKind.PHASE:
            if x == 1.0:
                return EsdResult(Classification.ASYMPTOTIC_DECAY, EsdMethod.ANALYTIC)
            gamma_star = 2.0 * (1.0 - x) / (4.0 * x - 1.0)
            tau = -2.0 * math.log(gamma_star)
        else:
            p_star = (6.0 * x - 3.0) / (8.0 * x - 2.0)
            tau = -2.0 * math.log1p(-p_star)
    else:
        if kind is NoiseKind.PHASE:
            if x == 1.0:
                return EsdResult(Classification.ASYMPTOTIC_DECAY, EsdMethod.ANALYTIC)
            tau = 2.0 * math.log(2.0 * x / (1.0 - x))
        else:
            p_star = (3.0 * x - 1.0) / (4.0 * x)
            tau = -2.0 * math.log1p(-p_star)
    return EsdResult(Classification.SUDDEN_DEATH, EsdMethod.ANALYTIC, tau_death=tau)


def esd_time_analytic(scenario: Scenario) -> EsdResult:
    """Death time from the closed threshold, where one exists.

    Raises ValueError for the pairs without a displayed threshold
    (cross-pattern/depolarizing and either family under amplitude noise);
    those are the bisection route's job.
    """
    if initial_concurrence(scenario) == 0.0:
        return EsdResult(Classification.INITIALLY_SEPARABLE, EsdMethod.ANALYTIC)
    state = scenario.state
    kind = scenario.noise.kind
    if isinstance(state, XStateParams):
        return _analytic_x(state, kind)
    if isinstance(state, PureStateParams):
        if kind is NoiseKind.DEPOLARIZING:
            tau = 2.0 * math.log(2.0)
            return EsdResult(Classification.SUDDEN_DEATH, EsdMethod.ANALYTIC, tau_death=tau)
        return EsdResult(Classification.ASYMPTOTIC_DECAY, EsdMethod.ANALYTIC)
    return _analytic_family(state, kind)


def esd_time_bisection(
    scenario: Scenario,
    tau_max: float = DEFAULT_TAU_MAX,
    tol: float = DEFAULT_BISECTION_TOL,
    points: int = SCAN_POINTS,
    use_oracle: bool = False,
) -> EsdResult:
    """Scan [0, tau_max] and bisect the first death point.

    The default evaluator is the closed form; `use_oracle` switches to the
    general route (evolve and run Wootters), which is slower and carries a
    rounding floor, hence the split zero test.
    """
    if tau_max <= 0.0:
        raise ValueError(f"tau_max must be positive, got {tau_max!r}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    if points < 2:
        raise ValueError(f"need at least 2 scan points, got {points!r}")

    if use_oracle:
        rho0 = initial_state(scenario)
        kind = scenario.noise.kind

        def value(t: float) -> float:
            lifted = lift_first(kraus_for(kind, noise_param(scenario.noise, t)))
            return concurrence_wootters(apply_channel(rho0, lifted))

        def dead(c: float) -> bool:
            return c < ZERO_CONCURRENCE_TOL

    else:

        def value(t: float) -> float:
            return closed_form_concurrence(scenario, t)

        def dead(c: float) -> bool:
            return c == 0.0

    if dead(value(0.0)):
        return EsdResult(Classification.INITIALLY_SEPARABLE, EsdMethod.BISECTION)

    grid = np.linspace(0.0, tau_max, points)
    values = [value(t) for t in grid[1:]]
    first = next((i + 1 for i, c in enumerate(values) if dead(c)), None)
    if first is None:
        return EsdResult(
            Classification.ASYMPTOTIC_DECAY, EsdMethod.BISECTION, horizon=tau_max
        )

    revived = [grid[i + 1] for i, c in enumerate(values[first:], start=first) if not dead(c)]
    if revived:
        raise RuntimeError(
            f"concurrence revived after dying, first at tau={revived[0]!r}; "
            "scan assumptions do not hold for this scenario"
        )

    lo, hi = grid[first - 1], grid[first]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if dead(value(mid)):
            hi = mid
        else:
            lo = mid
    return EsdResult(
        Classification.SUDDEN_DEATH,
        EsdMethod.BISECTION,
        tau_death=0.5 * (lo + hi),
        horizon=tau_max,
    )


# ---------------------------------------------------------------------------
# family ESD ranges


@dataclass(frozen=True)
class EsdBoundary:
    """Mixing-parameter interval with sudden death, for one (family, noise)."""

    family: Family
    noise_kind: NoiseKind
    x_min: float
    x_max: float
    min_open: bool
    max_open: bool
    critical_x: float | None = None

    @property
    def description(self) -> str:
        lo = "<" if self.min_open else "<="
        hi = "<" if self.max_open else "<="
        text = (
            f"{self.family.value}/{self.noise_kind.value}: sudden death for "
            f"{self.x_min:g} {lo} x {hi} {self.x_max:g}"
        )
        if self.critical_x is not None:
            text += f" (critical x = {self.critical_x:g})"
        return text

    def contains(self, x: float) -> bool:
        above = x > self.x_min if self.min_open else x >= self.x_min
        below = x < self.x_max if self.max_open else x <= self.x_max
        return above and below


_BOUNDARIES = {
    # amplitude criticals solve the eta -> 0 limit of the closed forms:
    # (4x-1)^2 = 6(1-x) and 2x^2 + x - 1 = 0
    (Family.ISOTROPIC, NoiseKind.AMPLITUDE): EsdBoundary(
        Family.ISOTROPIC, NoiseKind.AMPLITUDE, 0.5, 0.625, True, True, critical_x=0.625
    ),
    (Family.ISOTROPIC, NoiseKind.PHASE): EsdBoundary(
        Family.ISOTROPIC, NoiseKind.PHASE, 0.5, 1.0, True, True
    ),
    (Family.ISOTROPIC, NoiseKind.DEPOLARIZING): EsdBoundary(
        Family.ISOTROPIC, NoiseKind.DEPOLARIZING, 0.5, 1.0, True, False
    ),
    (Family.WERNER, NoiseKind.AMPLITUDE): EsdBoundary(
        Family.WERNER, NoiseKind.AMPLITUDE, 1.0 / 3.0, 0.5, True, True, critical_x=0.5
    ),
    (Family.WERNER, NoiseKind.PHASE): EsdBoundary(
        Family.WERNER, NoiseKind.PHASE, 1.0 / 3.0, 1.0, True, True
    ),
    (Family.WERNER, NoiseKind.DEPOLARIZING): EsdBoundary(
        Family.WERNER, NoiseKind.DEPOLARIZING, 1.0 / 3.0, 1.0, True, False
    ),
}


def esd_boundary(family: Family, noise_kind: NoiseKind) -> EsdBoundary:
    return _BOUNDARIES[(family, noise_kind)]


# ---------------------------------------------------------------------------
# figure presets


@dataclass(frozen=True)
class FigureCurve:
    label: str
    scenario: Scenario


@dataclass(frozen=True)
class FigurePreset:
    name: str
    tau_max: float
    curves: tuple[FigureCurve, ...]


def _xs(a, b, c, d, z, kind) -> Scenario:
    return Scenario(XStateParams(a, b, c, d, z), NoiseSpec(kind))


def _ps(a, b, c, d, f, g, h, kind) -> Scenario:
    return Scenario(PureStateParams(a, b, c, d, f, g, h), NoiseSpec(kind))


_QP = math.pi / 4.0

FIGURE_PRESETS = {
    "fig1": FigurePreset(
        "fig1",
        3.0,
        (
            FigureCurve("solid", _xs(0.1, 0.4, 0.4, 0.1, 0.2, NoiseKind.AMPLITUDE)),
            FigureCurve("dashed", _xs(0.1, 0.2, 0.6, 0.1, 0.2, NoiseKind.AMPLITUDE)),
        ),
    ),
    "fig2": FigurePreset(
        "fig2",
        2.0,
        (
            FigureCurve("solid", _xs(0.2, 0.3, 0.3, 0.2, 0.3, NoiseKind.PHASE)),
            FigureCurve("dashed", _xs(0.5, 0.1, 0.4, 0.0, 0.1, NoiseKind.PHASE)),
        ),
    ),
    "fig3": FigurePreset(
        "fig3",
        2.5,
        (
            FigureCurve("solid", _xs(0.5, 0.1, 0.4, 0.0, 0.1, NoiseKind.DEPOLARIZING)),
            FigureCurve("dot-dashed", _xs(0.1, 0.2, 0.6, 0.1, 0.2, NoiseKind.DEPOLARIZING)),
        ),
    ),
    "fig4": FigurePreset(
        "fig4",
        2.0,
        (
            FigureCurve(
                "dashed",
                _ps(0.125, 0.375, 0.375, 0.125, _QP, _QP, _QP, NoiseKind.DEPOLARIZING),
            ),
            FigureCurve(
                "dot-dashed",
                _ps(0.25, 0.25, 0.25, 0.25, _QP, _QP, _QP, NoiseKind.DEPOLARIZING),
            ),
            FigureCurve(
                "solid",
                _ps(0.5, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, NoiseKind.DEPOLARIZING),
            ),
        ),
    ),
}
