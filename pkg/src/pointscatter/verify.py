"""Randomized cross-checks shared by the test suite and the CLI.

Each check draws seeded configurations, evaluates one of the structural
identities (closed form vs direct solve, unitarity, flux conservation,
phase-parameter invariance) and reports the worst residual against its
tolerance.  The sampling ranges keep parameters away from walls so every
draw is well posed; infinite-length tags are substituted with a fixed
probability where a suite exercises them.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .compose import two_point_amplitudes
from .direct_solver import probability_current, solve_direct
from .single import s_matrix
from .u2param import NEG_INF, POS_INF, PointInteraction, canonicalize

ORACLE_TOL = 1e-9
FLUX_TOL = 1e-12
UNITARITY_TOL = 1e-12
NU_INVARIANCE_TOL = 1e-12

_INFINITE_FRACTION = 0.15
_MIN_SEPARATION = 0.05


def sample_interaction(
    rng: np.random.Generator,
    xi: float = 0.0,
    allow_infinite: bool = False,
) -> PointInteraction:
    """One well-posed random interaction (never a wall)."""
    while True:
        a, b = np.sort(rng.uniform(-3.0, 3.0, size=2))
        if b - a >= _MIN_SEPARATION:
            break
    lp, lm = float(b), float(a)
    L_plus = lp
    L_minus = lm
    if allow_infinite:
        if rng.random() < _INFINITE_FRACTION:
            L_plus = POS_INF
        if rng.random() < _INFINITE_FRACTION:
            L_minus = NEG_INF
    mu = float(rng.uniform(0.15, math.pi - 0.15))
    nu = float(rng.uniform(0.0, 2.0 * math.pi))
    return canonicalize(L_plus, L_minus, mu, nu, xi)


def sample_pair(
    rng: np.random.Generator, allow_infinite: bool = False
) -> tuple[PointInteraction, PointInteraction]:
    xi1 = float(rng.uniform(-1.0, 1.0))
    xi2 = xi1 + float(rng.uniform(0.3, 2.5))
    return (
        sample_interaction(rng, xi1, allow_infinite),
        sample_interaction(rng, xi2, allow_infinite),
    )


def check_oracle_equivalence(seed: int, trials: int) -> dict:
    """Closed-form amplitudes against the connection-condition solve."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        p1, p2 = sample_pair(rng)
        k = float(rng.uniform(0.01, 10.0))
        closed = two_point_amplitudes(p1, p2, k)
        direct = solve_direct(p1, p2, k)
        for x, y in zip(
            (closed.A, closed.B, closed.C, closed.D),
            (direct.A, direct.B, direct.C, direct.D),
        ):
            worst = max(worst, abs(x - y))
    return _entry("oracle_equivalence", worst, ORACLE_TOL)


def check_flux(seed: int, trials: int) -> dict:
    """Flux identity on the closed-form path, plus region currents on the
    direct path."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        p1, p2 = sample_pair(rng)
        k = float(rng.uniform(0.01, 10.0))
        worst = max(worst, *two_point_amplitudes(p1, p2, k).flux_residuals())
        left, middle, right = probability_current(solve_direct(p1, p2, k))
        scale = max(1.0, abs(left))
        worst = max(worst, abs(left - middle) / scale, abs(left - right) / scale)
    return _entry("flux_identity", worst, FLUX_TOL)


def check_unitarity(seed: int, trials: int, k_per_trial: int = 10) -> dict:
    """Row norms and the cross term of single-interaction S-matrices,
    including infinite-length tags."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        p = sample_interaction(rng, allow_infinite=True)
        for k in rng.uniform(0.01, 10.0, size=k_per_trial):
            worst = max(worst, *s_matrix(p, float(k)).unitarity_residuals())
    return _entry("unitarity", worst, UNITARITY_TOL)


def check_nu_invariance(seed: int, trials: int = 100, grid: int = 100) -> dict:
    """Transmission must not move when the phase parameters are resampled."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        p1, p2 = sample_pair(rng)
        q1 = PointInteraction(p1.L_plus, p1.L_minus, p1.mu, rng.uniform(0, 2 * math.pi), p1.xi)
        q2 = PointInteraction(p2.L_plus, p2.L_minus, p2.mu, rng.uniform(0, 2 * math.pi), p2.xi)
        for k in np.linspace(0.05, 8.0, grid):
            t_a = two_point_amplitudes(p1, p2, float(k)).transmission()
            t_b = two_point_amplitudes(q1, q2, float(k)).transmission()
            worst = max(worst, abs(t_a - t_b))
    return _entry("nu_invariance", worst, NU_INVARIANCE_TOL)


def _entry(name: str, worst: float, tol: float) -> dict:
    return {
        "name": name,
        "max_residual": float(worst),
        "tolerance": tol,
        "pass": bool(worst <= tol),
    }


def run_all(seed: int, trials: int) -> dict:
    """Run every suite; the report is JSON-ready and deterministic."""
    checks: list[tuple[Callable, dict]] = [
        (check_oracle_equivalence, {"seed": seed, "trials": trials}),
        (check_unitarity, {"seed": seed + 1, "trials": trials}),
        (check_flux, {"seed": seed + 2, "trials": trials}),
        (check_nu_invariance, {"seed": seed + 3, "trials": min(trials, 100)}),
    ]
    results = [fn(**kwargs) for fn, kwargs in checks]
    return {
        "seed": seed,
        "trials": trials,
        "checks": results,
        "pass": all(c["pass"] for c in results),
    }
