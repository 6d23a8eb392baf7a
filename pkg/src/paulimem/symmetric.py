"""Closed-form capacity machinery for channels with ``q0 = q1``, ``q2 = q3``.

For this family every minimal-output-entropy input can be taken of the
form ``cos(theta)|00> + e^(i phi) sin(theta)|11>``.  The channel output
of such a state has an explicit Pauli expansion and explicit eigenvalues,
which reduce the capacity to a two-way comparison: the product state
|00> below the memory threshold ``|4p - 1|``, the Bell state at
``theta = pi/4`` above it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .spectral import shannon_entropy_bits

#: Width of the degenerate band around ``mu = |4p - 1|``.
BOUNDARY_TOL = 1e-12


class Regime(enum.Enum):
    """Which input family attains the two-qubit capacity."""

    PRODUCT = "Product"
    ENTANGLED = "Entangled"
    BOUNDARY = "Boundary"
    UNKNOWN = "Unknown"


class AnsatzBranch(enum.Enum):
    """Support of the two-amplitude input family."""

    SPAN_00_11 = "ZeroZero-OneOne"
    SPAN_01_10 = "ZeroOne-OneZero"


@dataclass(frozen=True)
class SymmetricParams:
    """Weights of the symmetric family plus the derived constants.

    ``eta = 4p - 1`` and ``big_c = mu + (1 - mu) eta^2`` recur in every
    output formula.
    """

    p: float
    mu: float
    eta: float = field(init=False)
    big_c: float = field(init=False)

    def __post_init__(self):
        p = float(self.p)
        mu = float(self.mu)
        if not 0.0 <= p <= 0.5:
            raise ValueError(f"p must lie in [0, 1/2], got {p}")
        if not 0.0 <= mu <= 1.0:
            raise ValueError(f"mu must lie in [0, 1], got {mu}")
        eta = 4.0 * p - 1.0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "big_c", mu + (1.0 - mu) * eta * eta)


@dataclass(frozen=True)
class AnsatzState:
    """Two-amplitude pure input ``cos(theta)|a> + e^(i phi) sin(theta)|b>``."""

    theta: float
    phi: float = 0.0
    branch: AnsatzBranch = AnsatzBranch.SPAN_00_11

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not 0.0 <= theta <= math.pi / 2:
            raise ValueError(f"theta must lie in [0, pi/2], got {theta}")
        if not 0.0 <= phi < 2.0 * math.pi:
            raise ValueError(f"phi must lie in [0, 2*pi), got {phi}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


@dataclass(frozen=True)
class OptimalInputReport:
    """Optimal input state with its output entropy and capacity, in bits."""

    state: AnsatzState
    s_min_bits: float
    capacity_bits: float
    regime: Regime


def ansatz_state_vector(state: AnsatzState) -> np.ndarray:
    """Amplitudes of an ansatz state in the computational basis."""
    c = math.cos(state.theta)
    s = math.sin(state.theta)
    phase = complex(math.cos(state.phi), math.sin(state.phi))
    v = np.zeros(4, dtype=complex)
    if state.branch is AnsatzBranch.SPAN_00_11:
        v[0] = c
        v[3] = phase * s
    else:
        v[1] = c
        v[2] = phase * s
    return v


def _require_computed_branch(state: AnsatzState) -> None:
    if state.branch is not AnsatzBranch.SPAN_00_11:
        raise ValueError(
            "closed forms cover the |00>/|11> branch only; the |01>/|10> "
            "branch maps onto it by the covariance of the channel"
        )


def pauli_expansion_coefficients(
    params: SymmetricParams, state: AnsatzState
) -> np.ndarray:
    """Coefficients ``c[i, j]`` of the output on the Pauli-pair basis.

    The output density matrix is ``sum_ij c[i, j] s_i (x) s_j`` with

        c[0,0] = 1/4
        c[0,1] = c[1,0] = eta cos(2 theta) / 4
        c[1,1] = big_c / 4
        c[2,2] = -c[3,3] = mu sin(2 theta) cos(phi) / 4
        c[2,3] = c[3,2] = mu eta sin(2 theta) sin(phi) / 4

    and everything else zero.
    """
    _require_computed_branch(state)
    eta, big_c, mu = params.eta, params.big_c, params.mu
    cos2t = math.cos(2.0 * state.theta)
    sin2t = math.sin(2.0 * state.theta)
    c = np.zeros((4, 4))
    c[0, 0] = 0.25
    c[0, 1] = c[1, 0] = 0.25 * eta * cos2t
    c[1, 1] = 0.25 * big_c
    c[2, 2] = 0.25 * mu * sin2t * math.cos(state.phi)
    c[3, 3] = -c[2, 2]
    c[2, 3] = c[3, 2] = 0.25 * mu * eta * sin2t * math.sin(state.phi)
    return c


def _delta(params: SymmetricParams, theta: float, phi: float) -> float:
    eta, mu = params.eta, params.mu
    cos2t = math.cos(2.0 * theta)
    sin2t = math.sin(2.0 * theta)
    return math.sqrt(
        eta * eta * cos2t * cos2t
        + mu * mu * sin2t * sin2t
        * (math.cos(phi) ** 2 + eta * eta * math.sin(phi) ** 2)
    )


def output_eigenvalues(params: SymmetricParams, state: AnsatzState) -> np.ndarray:
    """Output spectrum for an ansatz input, sorted descending.

    The eigenvalues are ``(1 - C)/4`` twice and ``(1 + C)/4 +- Delta/2``
    with ``Delta = sqrt(eta^2 cos^2 2theta + mu^2 sin^2 2theta
    (cos^2 phi + eta^2 sin^2 phi))``.
    """
    _require_computed_branch(state)
    big_c = params.big_c
    delta = _delta(params, state.theta, state.phi)
    lam = np.array(
        [
            (1.0 - big_c) / 4.0,
            (1.0 - big_c) / 4.0,
            (1.0 + big_c) / 4.0 + delta / 2.0,
            (1.0 + big_c) / 4.0 - delta / 2.0,
        ]
    )
    lam[::-1].sort()
    return lam


def ansatz_output_entropy(
    params: SymmetricParams, theta: float, phi: float = 0.0
) -> float:
    """Output entropy in bits of the ansatz input with the given angles."""
    return shannon_entropy_bits(output_eigenvalues(params, AnsatzState(theta, phi)))


def optimal_input(params: SymmetricParams) -> OptimalInputReport:
    """Minimal-output-entropy input for the symmetric family.

    The output entropy decreases as Delta grows and phi = 0 maximizes
    Delta, so the optimum is whichever of theta = 0 (Delta = |eta|) and
    theta = pi/4 (Delta = mu) wins.  Within BOUNDARY_TOL of the tie both
    spectra coincide; the Bell state is reported as the representative.
    """
    eta_mag = abs(params.eta)
    if abs(params.mu - eta_mag) <= BOUNDARY_TOL:
        regime = Regime.BOUNDARY
        theta = math.pi / 4
    elif params.mu > eta_mag:
        regime = Regime.ENTANGLED
        theta = math.pi / 4
    else:
        regime = Regime.PRODUCT
        theta = 0.0
    state = AnsatzState(theta, 0.0)
    s_min = shannon_entropy_bits(output_eigenvalues(params, state))
    return OptimalInputReport(state, s_min, 2.0 - s_min, regime)


def threshold(p: float) -> float:
    """Memory value ``|4p - 1|`` at which the optimal input switches.

    Above it the Bell state wins, below it the product state |00> does.
    The magnitude (rather than the signed ``4p - 1``) is what the
    Delta comparison yields; for ``p < 1/4`` the signed expression would
    be negative and wrongly favor entanglement in the memoryless limit.
    """
    p = float(p)
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"p must lie in [0, 1/2], got {p}")
    return abs(4.0 * p - 1.0)


def capacity_symmetric(p: float, mu: float) -> float:
    """Two-qubit capacity ``2 - s_min`` in bits for the symmetric family.

    Continuous in ``mu``, with a slope discontinuity exactly at
    ``mu = threshold(p)`` whenever that value is interior to (0, 1).
    """
    return optimal_input(SymmetricParams(p, mu)).capacity_bits
