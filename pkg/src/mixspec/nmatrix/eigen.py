"""Numeric spectra by cyclic Jacobi rotations on the real embedding of N.

A Hermitian N = A + iB has the same eigenvalues as the real symmetric
block matrix [[A, -B], [B, A]], each one twice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core import MixedGraph
from .matrix import NMatrix, build_nmatrix

MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    tolerance: float = 1e-12

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)


def real_embedding(N: NMatrix) -> np.ndarray:
    H = N.to_complex()
    A, B = H.real, H.imag
    return np.block([[A, -B], [B, A]])


def _off_norm(S: np.ndarray) -> float:
    off = S - np.diag(np.diag(S))
    return math.sqrt(float(np.sum(off * off)))


def jacobi_eigenvalues(S: np.ndarray, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, unsorted."""
    S = np.array(S, dtype=float, copy=True)
    m = S.shape[0]
    for _ in range(max_sweeps):
        if _off_norm(S) < tol:
            return np.diag(S).copy()
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = S[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (S[q, q] - S[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = S[:, p].copy(), S[:, q].copy()
                S[:, p] = c * col_p - s * col_q
                S[:, q] = s * col_p + c * col_q
                row_p, row_q = S[p, :].copy(), S[q, :].copy()
                S[p, :] = c * row_p - s * row_q
                S[q, :] = s * row_p + c * row_q
    off = _off_norm(S)
    if off < tol:
        return np.diag(S).copy()
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})")


def eigenvalues(N: NMatrix | MixedGraph, tol: float = 1e-12) -> Spectrum:
    """Eigenvalues of N sorted descending."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if isinstance(N, MixedGraph):
        N = build_nmatrix(N)
    if N.n == 0:
        return Spectrum((), tol)
    doubled = np.sort(jacobi_eigenvalues(real_embedding(N), tol))[::-1]
    # every eigenvalue appears twice; adjacent entries of the sorted list pair up
    return Spectrum(tuple(float(x) for x in doubled[0::2]), tol)


def spectral_radius(S: Spectrum) -> float:
    if len(S) == 0:
        raise ValueError("spectral radius of an empty spectrum")
    return max(abs(S.eigenvalues[0]), abs(S.eigenvalues[-1]))
