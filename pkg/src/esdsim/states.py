"""Two-qubit state constructors: X states, pure states, isotropic and Werner.

Basis order is |00>, |01>, |10>, |11> throughout.  The X family carries a
diagonal (a, b, c, d) and a single central coherence z at entries (1, 2) and
(2, 1); all displayed evolutions stay inside this family, which is why the
closed-form concurrences exist.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eig

# Parameter-record tolerances: weights are user input, so the sum check is
# tight; the central-block positivity check absorbs only rounding.
WEIGHT_SUM_TOL = 1e-12
CENTRAL_BLOCK_TOL = 1e-12

# Matrix-level validation tolerance (Hermiticity, trace, min eigenvalue).
DENSITY_TOL = 1e-10

# Structural tolerance for X-pattern extraction; the channels preserve the
# pattern exactly, so this only absorbs rounding.
X_PATTERN_TOL = 1e-10


class Family(enum.Enum):
    ISOTROPIC = "isotropic"
    WERNER = "werner"


@dataclass(frozen=True)
class XStateParams:
    """Diagonal weights and central coherence of an X-form density matrix."""

    a: float
    b: float
    c: float
    d: float
    z: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            if getattr(self, name) < 0:
                raise ValueError(f"X-state weight {name} must be nonnegative")
        total = self.a + self.b + self.c + self.d
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"X-state weights must sum to 1, got {total!r}")
        if self.b * self.c - abs(self.z) ** 2 < -CENTRAL_BLOCK_TOL:
            raise ValueError(
                f"central block not PSD: need b*c >= |z|^2, got "
                f"{self.b * self.c!r} < {abs(self.z) ** 2!r}"
            )


@dataclass(frozen=True)
class PureStateParams:
    """Amplitude-squared weights a..d and phases f, g, h of a pure state."""

    a: float
    b: float
    c: float
    d: float
    f: float = 0.0
    g: float = 0.0
    h: float = 0.0

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            if getattr(self, name) < 0:
                raise ValueError(f"pure-state weight {name} must be nonnegative")
        total = self.a + self.b + self.c + self.d
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"pure-state weights must sum to 1, got {total!r}")


@dataclass(frozen=True)
class FamilyParams:
    """Mixing weight x of a one-parameter (isotropic or Werner) family."""

    family: Family
    x: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.x <= 1.0:
            raise ValueError(f"mixing weight x must lie in [0, 1], got {self.x!r}")


def validate_density_matrix(mat: np.ndarray, tol: float = DENSITY_TOL) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return the array.

    Raises ValueError naming the violated property.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {mat.shape}")
    defect = np.linalg.norm(mat - mat.conj().T)
    if defect > tol:
        raise ValueError(f"density matrix not Hermitian: defect {defect:.3e}")
    tr = mat.trace()
    if abs(tr - 1.0) > tol:
        raise ValueError(f"density matrix trace must be 1, got {tr!r}")
    w = hermitian_eig(mat, tol).eigenvalues
    if w[-1] < -tol:
        raise ValueError(f"density matrix not PSD: min eigenvalue {w[-1]:.3e}")
    return mat


def x_state(params: XStateParams) -> np.ndarray:
    """Density matrix with diagonal (a, b, c, d) and central coherence z."""
    rho = np.diag([params.a, params.b, params.c, params.d]).astype(complex)
    rho[1, 2] = params.z
    rho[2, 1] = complex(params.z).conjugate()
    return validate_density_matrix(rho)


def pure_state(params: PureStateParams) -> np.ndarray:
    """Rank-1 projector of sqrt(a)|00> + sqrt(b)e^{if}|01> + sqrt(c)e^{ig}|10> + sqrt(d)e^{ih}|11>."""
    amps = np.array(
        [
            math.sqrt(params.a),
            math.sqrt(params.b) * cmath.exp(1j * params.f),
            math.sqrt(params.c) * cmath.exp(1j * params.g),
            math.sqrt(params.d) * cmath.exp(1j * params.h),
        ]
    )
    rho = np.outer(amps, amps.conj())
    return validate_density_matrix(rho)


def isotropic(x: float) -> np.ndarray:
    """Two-qubit isotropic state with mixing weight x.

    Diagonal ((1-x)/3, (2x+1)/6, (2x+1)/6, (1-x)/3) with central coherence
    (4x-1)/6.  Reduces to I/4 at x = 1/4 and to a maximally entangled
    central-block projector at x = 1.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"isotropic weight x must lie in [0, 1], got {x!r}")
    corner = (1.0 - x) / 3.0
    mid = (2.0 * x + 1.0) / 6.0
    rho = np.diag([corner, mid, mid, corner]).astype(complex)
    rho[1, 2] = rho[2, 1] = (4.0 * x - 1.0) / 6.0
    return validate_density_matrix(rho)


def werner(x: float) -> np.ndarray:
    """Werner state: (1-x) I/4 + x times the singlet projector."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"Werner weight x must lie in [0, 1], got {x!r}")
    corner = (1.0 - x) / 4.0
    mid = (1.0 + x) / 4.0
    rho = np.diag([corner, mid, mid, corner]).astype(complex)
    rho[1, 2] = rho[2, 1] = -x / 2.0
    return validate_density_matrix(rho)


def family_state(params: FamilyParams) -> np.ndarray:
    if params.family is Family.ISOTROPIC:
        return isotropic(params.x)
    return werner(params.x)


# Entries allowed to be nonzero in the X pattern (central coherence only).
_X_PATTERN = {(0, 0), (1, 1), (2, 2), (3, 3), (1, 2), (2, 1)}


def as_x_params(rho: np.ndarray, tol: float = X_PATTERN_TOL) -> XStateParams:
    """Extract (a, b, c, d, z) from a matrix in the X pattern.

    Every entry outside the diagonal-plus-central-coherence pattern must have
    magnitude at most `tol`; the offending entry is named otherwise.  The
    returned params rebuild the input within `tol` entrywise.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    for i in range(4):
        for j in range(4):
            if (i, j) not in _X_PATTERN and abs(rho[i, j]) > tol:
                raise ValueError(
                    f"matrix is not in X form: entry ({i}, {j}) has magnitude "
                    f"{abs(rho[i, j]):.3e} > tol {tol:.3e}"
                )
    if abs(rho[2, 1] - rho[1, 2].conjugate()) > tol:
        raise ValueError("matrix is not in X form: central coherences are not conjugate")
    diag = rho.diagonal()
    if np.abs(diag.imag).max() > tol:
        raise ValueError("matrix is not in X form: diagonal has imaginary part")
    return XStateParams(
        float(diag[0].real),
        float(diag[1].real),
        float(diag[2].real),
        float(diag[3].real),
        complex(rho[1, 2]),
    )
