"""Exact two-qubit Pauli algebra in the channel's index convention.

The four single-qubit Pauli matrices are indexed so that ``sigma_1`` is
the diagonal one:

    sigma_0 = [[1, 0], [0, 1]]      sigma_1 = [[1, 0], [0, -1]]
    sigma_2 = [[0, 1], [1, 0]]      sigma_3 = [[0, -i], [i, 0]]

With this ordering the computational basis |00>, |01>, |10>, |11> is the
common eigenbasis of ``sigma_1 (x) sigma_1``, which the closed-form
capacity derivation relies on.  All functions here are pure and operate
on plain complex ndarrays.
"""

from __future__ import annotations

import numpy as np

#: Entrywise absolute tolerance for operator equality.
ATOL = 1e-12

#: Bound on ||U U+ - I||_max accepted by :func:`conjugate`.
UNITARY_TOL = 1e-10


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    arr.flags.writeable = False
    return arr


_PAULI = (
    _frozen([[1, 0], [0, 1]]),
    _frozen([[1, 0], [0, -1]]),
    _frozen([[0, 1], [1, 0]]),
    _frozen([[0, -1j], [1j, 0]]),
)

# 16 two-qubit products sigma_i (x) sigma_j, flat index 4*i + j.
_PAIRS = tuple(
    _frozen(np.kron(_PAULI[i], _PAULI[j])) for i in range(4) for j in range(4)
)

# Stacked (16, 4, 4) view used by vectorised channel application.
_PAIR_STACK = np.stack(_PAIRS)
_PAIR_STACK.flags.writeable = False


def validate_pauli_index(i: int) -> int:
    """Return ``i`` if it is a valid Pauli index, else raise ValueError."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be one of 0, 1, 2, 3; got {i!r}")
    return int(i)


def pauli_matrix(i: int) -> np.ndarray:
    """Single-qubit Pauli matrix for index ``i`` (convention above)."""
    return _PAULI[validate_pauli_index(i)].copy()


def tensor(a, b) -> np.ndarray:
    """Kronecker product with row-major blocks.

    ``out[2r+s, 2c+t] = a[r, c] * b[s, t]`` for 2x2 inputs, so the first
    factor addresses the first qubit.
    """
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def pauli_pair(i: int, j: int) -> np.ndarray:
    """``sigma_i (x) sigma_j`` as a fresh 4x4 array."""
    return _PAIRS[4 * validate_pauli_index(i) + validate_pauli_index(j)].copy()


def conjugate(u, rho) -> np.ndarray:
    """Adjoint action ``U rho U+`` of a unitary ``U``.

    Raises ValueError if ``U`` fails the unitarity bound
    ``||U U+ - I||_max <= UNITARY_TOL``.
    """
    u = np.asarray(u, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    eye = np.eye(u.shape[0])
    defect = np.abs(u @ u.conj().T - eye).max()
    if defect > UNITARY_TOL:
        raise ValueError(f"operator is not unitary: ||U U+ - I||_max = {defect:.3e}")
    return u @ rho @ u.conj().T
