"""Eigenvalues of 4x4 Hermitian matrices and entropy functionals in bits."""

from __future__ import annotations

import numpy as np

#: Bound on ||M - M+||_max accepted as Hermitian.
HERMITIAN_TOL = 1e-10

#: Eigenvalue dust in [-DUST_TOL, 0) is clamped to zero before the log.
DUST_TOL = 1e-9

#: Probability vectors must sum to one within this tolerance.
PROB_SUM_TOL = 1e-9

#: Density-matrix spectra must sum to one within this tolerance.
TRACE_TOL = 1e-10


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a 4x4 Hermitian matrix, sorted descending.

    Raises ValueError for non-4x4 or non-Hermitian input.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    defect = np.abs(m - m.conj().T).max()
    if defect > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian: ||M - M+||_max = {defect:.3e}")
    return np.linalg.eigvalsh(m)[::-1].copy()


def shannon_entropy_bits(p) -> float:
    """Shannon entropy -sum p_i log2 p_i with 0 log 0 = 0, in bits.

    Entries in [-DUST_TOL, 0) are clamped to zero; inputs violating
    positivity or normalization beyond tolerance are rejected.
    """
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0:
        raise ValueError("probability vector is empty")
    if p.min() < -DUST_TOL:
        raise ValueError(f"negative probability {p.min():.3e} beyond tolerance")
    total = p.sum()
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    p = np.clip(p, 0.0, 1.0)
    nz = p[p > 0.0]
    return float(-(nz * np.log2(nz)).sum()) + 0.0  # +0.0 turns -0.0 into 0.0


def von_neumann_entropy_bits(rho) -> float:
    """Von Neumann entropy of a two-qubit density matrix, in bits.

    Equals the Shannon entropy of the spectrum; range [0, 2].
    """
    spectrum = hermitian_eigenvalues(rho)
    if spectrum.min() < -DUST_TOL:
        raise ValueError(
            f"not positive semidefinite: smallest eigenvalue {spectrum.min():.3e}"
        )
    if abs(spectrum.sum() - 1.0) > TRACE_TOL:
        raise ValueError(f"trace is {spectrum.sum()!r}, not 1")
    return shannon_entropy_bits(spectrum)
