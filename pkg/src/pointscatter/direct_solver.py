"""Independent reference solver for the two-interaction problem.

Instead of composing S-matrices, this module writes the wavefunction as
plane waves in the three regions and imposes the connection conditions of
both interactions directly.  Each interaction contributes two rows: in the
eigenbasis of its characteristic matrix the condition decouples into

    a psi + b psi' = 0        per eigenchannel,

where (a, b) is the projective form of the channel length, psi collects the
boundary values rotated by V(mu, nu) and psi' the outward derivatives.  The
result is a 4x4 complex system for (A, B, C, D) that shares no algebra with
the closed forms in compose.py, which is the point: the two routes are
cross-checked against each other in the test suite and the verify command.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .compose import TwoPointSolution, _check_order
from .errors import IllConditionedError
from .single import _check_wavenumber
from .u2param import PointInteraction

MAX_CONDITION = 1e12
RESIDUAL_BUDGET = 1e-10


@dataclass(frozen=True, eq=False)
class LinearSystem4:
    """Assembled system M u = r for the unknowns u = (A, B, C, D)."""

    matrix: np.ndarray
    rhs: np.ndarray
    condition: float


def _interaction_rows(p: PointInteraction, phi_plus, dphi_plus, phi_minus, dphi_minus):
    """Two condition rows as linear forms over (1, A, B, C, D).

    phi_plus/dphi_plus are the value and derivative forms on the right side
    of the interaction, phi_minus/dphi_minus on the left side.
    """
    half = 0.5 * p.mu
    cn, sn = math.cos(half), math.sin(half)
    env = cmath.exp(1j * p.nu)
    ap, bp = p.L_plus.projective()
    am, bm = p.L_minus.projective()
    # eigenchannel boundary values; outward derivative on the left side
    psi_plus = env * cn * phi_plus + sn * phi_minus
    dpsi_plus = env * cn * dphi_plus - sn * dphi_minus
    psi_minus = -env * sn * phi_plus + cn * phi_minus
    dpsi_minus = -env * sn * dphi_plus - cn * dphi_minus
    return (
        ap * psi_plus + bp * dpsi_plus,
        am * psi_minus + bm * dpsi_minus,
    )


def assemble(p1: PointInteraction, p2: PointInteraction, k: float) -> LinearSystem4:
    """Build the 4x4 system for unit incidence from the left.

    Rows are rescaled to unit max-norm so the condition estimate reflects
    the geometry, not the row scaling.
    """
    _check_wavenumber(k)
    _check_order(p1, p2)
    k = float(k)

    e1 = cmath.exp(1j * k * p1.xi)
    e2 = cmath.exp(1j * k * p2.xi)
    zero = np.zeros(5, dtype=complex)

    def form(coeffs):
        v = zero.copy()
        for idx, val in coeffs:
            v[idx] = val
        return v

    # unknown layout: (1, A, B, C, D); regions meet at xi1 and xi2
    phi1_minus = form([(0, e1), (1, 1 / e1)])
    dphi1_minus = 1j * k * form([(0, e1), (1, -1 / e1)])
    phi1_plus = form([(2, e1), (3, 1 / e1)])
    dphi1_plus = 1j * k * form([(2, e1), (3, -1 / e1)])
    phi2_minus = form([(2, e2), (3, 1 / e2)])
    dphi2_minus = 1j * k * form([(2, e2), (3, -1 / e2)])
    phi2_plus = form([(4, e2)])
    dphi2_plus = 1j * k * form([(4, e2)])

    rows = [
        *_interaction_rows(p1, phi1_plus, dphi1_plus, phi1_minus, dphi1_minus),
        *_interaction_rows(p2, phi2_plus, dphi2_plus, phi2_minus, dphi2_minus),
    ]
    full = np.array(rows)
    scale = np.max(np.abs(full), axis=1)
    scale[scale == 0.0] = 1.0
    full = full / scale[:, None]

    matrix = full[:, 1:]
    rhs = -full[:, 0]
    return LinearSystem4(matrix=matrix, rhs=rhs, condition=float(np.linalg.cond(matrix)))


def solve_direct(
    p1: PointInteraction,
    p2: PointInteraction,
    k: float,
    max_condition: float = MAX_CONDITION,
) -> TwoPointSolution:
    """Solve the assembled system and return the four amplitudes.

    Raises IllConditionedError when the condition number exceeds
    ``max_condition`` or the back-substituted residual is not small.
    """
    system = assemble(p1, p2, k)
    if system.condition > max_condition:
        raise IllConditionedError(
            f"condition number {system.condition:.3e} exceeds {max_condition:g}"
        )
    u = np.linalg.solve(system.matrix, system.rhs)
    residual = np.max(np.abs(system.matrix @ u - system.rhs))
    norm = max(
        float(np.max(np.abs(system.rhs))),
        float(np.max(np.abs(system.matrix)) * np.max(np.abs(u))),
        1e-300,
    )
    if residual / norm > RESIDUAL_BUDGET:
        raise IllConditionedError(
            f"solution residual {residual / norm:.3e} above {RESIDUAL_BUDGET:g}"
        )
    a, b, c, d = (complex(x) for x in u)
    return TwoPointSolution(A=a, B=b, C=c, D=d, k=float(k))


def probability_current(sol: TwoPointSolution) -> tuple[float, float, float]:
    """Probability current in each region, in units where hbar/m = 1.

    All three must agree for a unitary pair of interactions.
    """
    k = sol.k
    left = k * (1.0 - abs(sol.A) ** 2)
    middle = k * (abs(sol.B) ** 2 - abs(sol.C) ** 2)
    right = k * abs(sol.D) ** 2
    return (left, middle, right)
