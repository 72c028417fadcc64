"""Shared test helpers.

The brute-force oracle here rebuilds scattering amplitudes from nothing but
the characteristic matrix and plane-wave matching, with numpy's generic
linear solver doing the work.  It shares no code path with the closed forms
in the package (no eigendecomposition, no projective length coordinates),
so agreement between the two is meaningful evidence.

The connection condition at a point reads

    (U - 1) Psi + i (U + 1) Psi' = 0

where Psi stacks the boundary values from the right and left side and Psi'
the outward derivatives.  Each plane-wave term is described by an affine
coefficient vector (constant slot first, one slot per unknown amplitude),
which turns the two conditions per interaction into linear equations.
"""

import numpy as np
import pytest

from pointscatter import angles_from_lengths, characteristic_matrix


def interaction_rows(p, k, left_terms, right_terms, n_unknowns):
    """Two equations enforced by the interaction at p.xi.

    Terms are (coeffs, sign) pairs for the wave c * exp(sign*1j*k*x), with
    c an affine vector of length n_unknowns + 1.  Returns a complex array
    of shape (2, n_unknowns + 1); a solution must null every row.
    """
    u = characteristic_matrix(angles_from_lengths(p))
    a = u - np.eye(2)
    b = 1j * (u + np.eye(2))
    val = np.zeros((2, n_unknowns + 1), dtype=complex)
    der = np.zeros((2, n_unknowns + 1), dtype=complex)
    for coeffs, sign in right_terms:
        c = np.asarray(coeffs, dtype=complex)
        phase = np.exp(sign * 1j * k * p.xi)
        val[0] += c * phase
        der[0] += c * (sign * 1j * k) * phase
    for coeffs, sign in left_terms:
        c = np.asarray(coeffs, dtype=complex)
        phase = np.exp(sign * 1j * k * p.xi)
        val[1] += c * phase
        # outward on the left side points along -x
        der[1] += c * (-sign * 1j * k) * phase
    return a @ val + b @ der


def solve_affine(rows):
    """Solve rows @ (1, x) = 0 for the unknown vector x."""
    rows = np.asarray(rows)
    return np.linalg.solve(rows[:, 1:], -rows[:, 0])


def brute_single(p, k):
    """(R_l, T_l, R_r, T_r) for one interaction, by direct matching."""
    # from the left: e^{ikx} + r e^{-ikx} | t e^{ikx},  unknowns (r, t)
    rows = interaction_rows(
        p, k,
        left_terms=[((1, 0, 0), +1), ((0, 1, 0), -1)],
        right_terms=[((0, 0, 1), +1)],
        n_unknowns=2,
    )
    r_l, t_l = solve_affine(rows)
    # from the right: t e^{-ikx} | e^{-ikx} + r e^{ikx}
    rows = interaction_rows(
        p, k,
        left_terms=[((0, 0, 1), -1)],
        right_terms=[((1, 0, 0), -1), ((0, 1, 0), +1)],
        n_unknowns=2,
    )
    r_r, t_r = solve_affine(rows)
    return r_l, t_l, r_r, t_r


def brute_pair(p1, p2, k):
    """(A, B, C, D) for two interactions, by a 4x4 direct solve."""
    inc = (1, 0, 0, 0, 0)
    sa = (0, 1, 0, 0, 0)
    sb = (0, 0, 1, 0, 0)
    sc = (0, 0, 0, 1, 0)
    sd = (0, 0, 0, 0, 1)
    rows1 = interaction_rows(
        p1, k,
        left_terms=[(inc, +1), (sa, -1)],
        right_terms=[(sb, +1), (sc, -1)],
        n_unknowns=4,
    )
    rows2 = interaction_rows(
        p2, k,
        left_terms=[(sb, +1), (sc, -1)],
        right_terms=[(sd, +1)],
        n_unknowns=4,
    )
    return solve_affine(np.vstack([rows1, rows2]))


@pytest.fixture
def rng():
    return np.random.default_rng(20260815)
