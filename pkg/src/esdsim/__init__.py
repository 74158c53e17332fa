"""Two-qubit entanglement decay under a single local noise channel.

Build a state (X form, pure, isotropic or Werner), pick one of the three
noises, and follow its concurrence: closed forms, a general spin-flip
route that checks them, and sudden-death detection by threshold formula
or bisection.
"""
from .channels import (
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
)
from .concurrence import (
    SPIN_FLIP,
    concurrence_pure,
    concurrence_pure_determinant,
    concurrence_wootters,
    concurrence_x,
    spin_flip_spectrum,
)
from .dynamics import (
    FIGURE_PRESETS,
    Classification,
    EsdBoundary,
    EsdMethod,
    EsdResult,
    Scenario,
    Trajectory,
    TrajectorySource,
    closed_form_concurrence,
    closed_form_trajectory,
    esd_boundary,
    esd_time_analytic,
    esd_time_bisection,
    evolved_state,
    initial_concurrence,
    initial_state,
    noise_param,
    numeric_trajectory,
)
from .linalg import EigDecomposition, dagger, hermitian_eig, kron, psd_sqrt
from .states import (
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
from .verification import SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "EigDecomposition",
    "dagger",
    "hermitian_eig",
    "kron",
    "psd_sqrt",
    "Family",
    "FamilyParams",
    "PureStateParams",
    "XStateParams",
    "as_x_params",
    "family_state",
    "isotropic",
    "pure_state",
    "validate_density_matrix",
    "werner",
    "x_state",
    "KrausSet",
    "NoiseKind",
    "NoiseSpec",
    "amplitude_kraus",
    "apply_channel",
    "completeness_residual",
    "depolarizing_kraus",
    "kraus_for",
    "lift_first",
    "phase_kraus",
    "SPIN_FLIP",
    "concurrence_pure",
    "concurrence_pure_determinant",
    "concurrence_wootters",
    "concurrence_x",
    "spin_flip_spectrum",
    "FIGURE_PRESETS",
    "Classification",
    "EsdBoundary",
    "EsdMethod",
    "EsdResult",
    "Scenario",
    "Trajectory",
    "TrajectorySource",
    "closed_form_concurrence",
    "closed_form_trajectory",
    "esd_boundary",
    "esd_time_analytic",
    "esd_time_bisection",
    "evolved_state",
    "initial_concurrence",
    "initial_state",
    "noise_param",
    "numeric_trajectory",
    "SuiteResult",
    "run_all",
    "run_suite",
    "__version__",
]
