"""Two point interactions in series: amplitudes, transmission, chaining.

With unit incidence from the left, the wavefunction is

    exp(ikx) + A exp(-ikx)   left of the first interaction,
    B exp(ikx) + C exp(-ikx) between the two,
    D exp(ikx)               right of the second,

and eliminating the middle region gives every amplitude in terms of the two
single-interaction S-matrices.  The denominator 1 - R_r1 R_l2 is the usual
round-trip factor of the cavity formed by the pair; expanding it as a
geometric series reproduces the multiple-bounce picture (interference_series).

The transmission probability is also available in a closed form that only
involves the parameter combinations of both interactions and the separation,
which is what the sweeps and the resonance search evaluate on dense grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadOrderingError, DegenerateDenominatorError
from .single import (
    TransferMatrix,
    _amplitude_parts,
    _check_wavenumber,
    _s_components,
    s_matrix,
    transfer_matrix,
)
from .u2param import PointInteraction

ROUND_TRIP_CUTOFF = 1e-14
_CONVERGENCE_MARGIN = 1e-12


def _check_order(p1: PointInteraction, p2: PointInteraction) -> None:
    if not p1.xi < p2.xi:
        raise BadOrderingError(
            f"interaction positions must increase: xi1={p1.xi!r}, xi2={p2.xi!r}"
        )


@dataclass(frozen=True)
class TwoPointSolution:
    """Scattering amplitudes of the pair at one wavenumber.

    A is the overall reflection, D the overall transmission, B and C the
    right- and left-moving coefficients between the interactions.
    """

    A: complex
    B: complex
    C: complex
    D: complex
    k: float

    def flux_residuals(self) -> tuple[float, float]:
        """How well 1 - |A|^2 = |B|^2 - |C|^2 = |D|^2 holds, as the two
        differences against |D|^2."""
        t = abs(self.D) ** 2
        r1 = abs(1.0 - abs(self.A) ** 2 - t)
        r2 = abs(abs(self.B) ** 2 - abs(self.C) ** 2 - t)
        return (r1, r2)

    def transmission(self) -> float:
        return abs(self.D) ** 2


def two_point_amplitudes(p1: PointInteraction, p2: PointInteraction, k: float) -> TwoPointSolution:
    """Solve the pair by eliminating the middle region."""
    _check_wavenumber(k)
    _check_order(p1, p2)
    k = float(k)
    s1 = s_matrix(p1, k)
    s2 = s_matrix(p2, k)
    round_trip = s1.R_r * s2.R_l
    denom = 1.0 - round_trip
    if abs(denom) < ROUND_TRIP_CUTOFF:
        raise DegenerateDenominatorError(
            f"round-trip denominator vanished at k = {k!r}"
        )
    b = s1.T_l / denom
    return TwoPointSolution(
        A=s1.R_l + s1.T_l * s1.T_r * s2.R_l / denom,
        B=b,
        C=b * s2.R_l,
        D=b * s2.T_l,
        k=k,
    )


def transmission_probability(p1: PointInteraction, p2: PointInteraction, k):
    """|D|^2 from the closed form, for scalar or ndarray k.

    Agrees with two_point_amplitudes(...).transmission() to rounding; the
    closed form never references nu or the absolute positions, only the
    separation, which makes it the cheap choice for dense sweeps.
    """
    _check_wavenumber(k)
    _check_order(p1, p2)
    k = np.asarray(k, dtype=float) if np.ndim(k) else float(k)
    sym1, anti1, z1 = _amplitude_parts(p1, k)
    sym2, anti2, z2 = _amplitude_parts(p2, k)
    c1, s1 = math.cos(p1.mu), math.sin(p1.mu)
    c2, s2 = math.cos(p2.mu), math.sin(p2.mu)
    d = p2.xi - p1.xi
    big = z1 * z2 - (sym1 - 1j * k * c1 * anti1) * (sym2 + 1j * k * c2 * anti2) * np.exp(2j * k * d)
    num = (k ** 4) * (s1 * s1) * (s2 * s2) * (anti1 * anti1) * (anti2 * anti2)
    return num / np.abs(big) ** 2


def chain_transfer(interactions, k: float) -> TransferMatrix:
    """Product of transfer matrices for interactions ordered left to right."""
    _check_wavenumber(k)
    k = float(k)
    ps = list(interactions)
    for a, b in zip(ps, ps[1:]):
        if not a.xi < b.xi:
            raise BadOrderingError("interaction positions must strictly increase")
    m = TransferMatrix(np.eye(2, dtype=complex), k)
    for p in ps:
        m = transfer_matrix(p, k) @ m
    return m


def scattering_from_transfer(m: TransferMatrix) -> tuple[complex, complex]:
    """(reflection, transmission) for unit left incidence implied by a
    chained transfer matrix."""
    mm = m.matrix
    if mm[1, 1] == 0:
        raise DegenerateDenominatorError("transfer matrix has no transmitting solution")
    refl = -mm[1, 0] / mm[1, 1]
    trans = mm[0, 0] + mm[0, 1] * refl
    return complex(refl), complex(trans)


@dataclass(frozen=True)
class SeriesExpansion:
    """Geometric multiple-bounce expansion of the transmission amplitude D.

    partial_sums[m] = prefactor * sum_{j<=m} ratio^j.  When |ratio| < 1 the
    tail after n terms is bounded by |prefactor| |ratio|^n / (1 - |ratio|);
    ``convergent`` is False for |ratio| within rounding of 1 (walls facing
    walls), which is a flag, not an error.
    """

    ratio: complex
    prefactor: complex
    partial_sums: tuple[complex, ...]
    convergent: bool

    @property
    def limit(self) -> complex:
        """Sum of the full series, i.e. the amplitude D."""
        return self.prefactor / (1.0 - self.ratio)


def interference_series(
    p1: PointInteraction, p2: PointInteraction, k: float, n_terms: int = 64
) -> SeriesExpansion:
    """Expand D in round trips between the interactions."""
    _check_wavenumber(k)
    _check_order(p1, p2)
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    k = float(k)
    s1 = s_matrix(p1, k)
    s2 = s_matrix(p2, k)
    ratio = s1.R_r * s2.R_l
    prefactor = s1.T_l * s2.T_l
    sums = []
    term = prefactor
    acc = 0.0 + 0.0j
    for _ in range(n_terms):
        acc += term
        sums.append(acc)
        term *= ratio
    return SeriesExpansion(
        ratio=complex(ratio),
        prefactor=complex(prefactor),
        partial_sums=tuple(sums),
        convergent=abs(ratio) < 1.0 - _CONVERGENCE_MARGIN,
    )
