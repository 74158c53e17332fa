"""Dense complex matrix helpers for the 2x2 / 4x4 kernels used throughout.

Everything here is a thin, contract-checked wrapper over numpy: the matrices
never exceed 4x4, so robustness and explicit tolerances matter more than speed.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

# Hermiticity / PSD clamping tolerance: channel application can push
# eigenvalues of an exactly-PSD matrix a few ulp negative.
PSD_CLAMP_TOL = 1e-10

# Relative cut below which a nonnegative eigenvalue is snapped to exact zero.
# Rank-deficient inputs (pure states and their low-rank evolutions) otherwise
# keep O(eps) eigenvalue noise that sqrt amplifies to ~1e-8.
ZERO_EIG_RTOL = 1e-13


class EigDecomposition(NamedTuple):
    """Hermitian eigendecomposition with eigenvalues sorted descending."""

    eigenvalues: np.ndarray  # real, shape (n,), descending
    eigenvectors: np.ndarray  # unitary, columns ordered to match


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices (block (i,j) is a[i,j] * b)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"kron expects two 2x2 matrices, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def hermitian_eig(h: np.ndarray, tol: float = PSD_CLAMP_TOL) -> EigDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Parameters
    ----------
    h : array_like
        Square matrix, Hermitian within `tol` in Frobenius norm.
    tol : float
        Allowed Hermiticity defect; the matrix is symmetrized before the
        solve so the defect only ever absorbs rounding.

    Raises
    ------
    ValueError
        If the input is not square or not Hermitian within `tol`.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    defect = np.linalg.norm(h - h.conj().T)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: defect {defect:.3e} > tol {tol:.3e}")
    w, v = np.linalg.eigh((h + h.conj().T) / 2.0)
    order = np.argsort(w)[::-1]
    return EigDecomposition(w[order].copy(), v[:, order].copy())


def psd_sqrt(h: np.ndarray, tol: float = PSD_CLAMP_TOL) -> np.ndarray:
    """Hermitian positive-semidefinite square root.

    Eigenvalues in [-tol, 0) are clamped to 0; eigenvalues below
    ZERO_EIG_RTOL relative to the largest one are snapped to exact zero so
    that rank-deficient inputs yield an exactly rank-deficient root.

    Raises
    ------
    ValueError
        If an eigenvalue sits below -tol (input not PSD).
    """
    w, v = hermitian_eig(h, tol)
    if w[-1] < -tol:
        raise ValueError(f"matrix is not PSD: min eigenvalue {w[-1]:.3e} < -{tol:.3e}")
    cut = ZERO_EIG_RTOL * max(w[0], 0.0)
    w = np.where(w < cut, 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T
