"""Scattering of a plane wave by one point interaction.

All amplitudes are evaluated through the projective pair (a, b) of each
length (see u2param).  Writing N = a+ a- + k^2 b+ b- for the symmetric
combination, W = b+ a- - b- a+ for the antisymmetric one and
Z = (a+ + i k b+)(a- + i k b-) for the denominator, the right-incidence
reflection amplitude is

    R_r = -(N - i k cos(mu) W) / Z * exp(-2 i k xi),

with the left one carrying the opposite sign of the cos(mu) term and the
opposite position phase.  Both transmission amplitudes are
i k sin(mu) W / Z times exp(+-i nu).  The identity N^2 + k^2 W^2 = |Z|^2
holds algebraically, which is where unitarity comes from and why the
projective form stays exact for infinite lengths.

Functions accept a scalar wavenumber or an ndarray of wavenumbers; the
dataclass wrappers are scalar only.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveWavenumberError, OpaqueInteractionError
from .u2param import PointInteraction

# below this transmission magnitude an interaction is treated as a wall
WALL_TRANSMISSION_CUTOFF = 1e-14


def _check_wavenumber(k) -> None:
    arr = np.asarray(k, dtype=float)
    if arr.size == 0 or not np.all(np.isfinite(arr)) or not np.all(arr > 0.0):
        raise NonPositiveWavenumberError(
            "wavenumber must be finite and strictly positive"
        )


def _amplitude_parts(p: PointInteraction, k):
    """(N, W, Z) for scalar or array k; N, W are real, Z complex."""
    ap, bp = p.L_plus.projective()
    am, bm = p.L_minus.projective()
    sym = ap * am + (k * k) * (bp * bm)
    anti = bp * am - bm * ap
    z = (ap + 1j * k * bp) * (am + 1j * k * bm)
    return sym, anti, z


def _s_components(p: PointInteraction, k):
    """R_r, R_l, T_r, T_l for scalar or array k (no validation)."""
    sym, anti, z = _amplitude_parts(p, k)
    c = math.cos(p.mu)
    s = math.sin(p.mu)
    pos = np.exp(2j * k * p.xi)
    r_core = -(sym - 1j * k * c * anti) / z
    l_core = -(sym + 1j * k * c * anti) / z
    t = 1j * k * s * anti / z
    env = cmath.exp(1j * p.nu)
    return r_core / pos, l_core * pos, t * env, t / env


@dataclass(frozen=True)
class ScatteringMatrix:
    """One-interaction amplitudes at a single wavenumber.

    Layout: the matrix sends (right-incoming, left-incoming) amplitudes to
    (right-outgoing, left-outgoing), i.e. rows [[R_r, T_l], [T_r, R_l]].
    """

    R_r: complex
    R_l: complex
    T_r: complex
    T_l: complex
    k: float

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.R_r, self.T_l], [self.T_r, self.R_l]])

    def unitarity_residuals(self) -> tuple[float, float, float]:
        """Deviations of the two row norms from 1 and of the cross term
        conj(T_l) R_r + conj(R_l) T_r from 0."""
        r1 = abs(abs(self.R_r) ** 2 + abs(self.T_r) ** 2 - 1.0)
        r2 = abs(abs(self.R_l) ** 2 + abs(self.T_l) ** 2 - 1.0)
        r3 = abs(self.T_l.conjugate() * self.R_r + self.R_l.conjugate() * self.T_r)
        return (r1, r2, r3)


def s_matrix(p: PointInteraction, k: float) -> ScatteringMatrix:
    """Reflection and transmission amplitudes at wavenumber k > 0."""
    _check_wavenumber(k)
    k = float(k)
    rr, rl, tr, tl = _s_components(p, k)
    return ScatteringMatrix(complex(rr), complex(rl), complex(tr), complex(tl), k)


def probabilities(p: PointInteraction, k):
    """Transmission and reflection probabilities (T1, R1) at k.

    Computed from the explicitly real closed forms, so the result does not
    depend on nu or xi at all.  Accepts scalar or ndarray k.
    """
    _check_wavenumber(k)
    k = np.asarray(k, dtype=float) if np.ndim(k) else float(k)
    sym, anti, z = _amplitude_parts(p, k)
    mag = np.abs(z) ** 2
    c = math.cos(p.mu)
    s = math.sin(p.mu)
    t1 = (k * k) * (s * s) * (anti * anti) / mag
    r1 = (sym * sym + (k * k) * (c * c) * (anti * anti)) / mag
    return t1, r1


def transmission_peak(p: PointInteraction) -> tuple[float, float] | None:
    """Location and height of the lone transmission maximum, when one exists.

    For finite lengths with L_plus * L_minus != 0 the probability T1 has a
    single interior maximum at k = 1/sqrt(|L_plus L_minus|); we return that
    analytic argmax and evaluate T1 there.  Returns None for walls, infinite
    lengths, or a vanishing product (monotone T1, no interior peak).
    """
    if p.has_infinite_length:
        return None
    lp, lm = p.L_plus.value, p.L_minus.value
    prod = lp * lm
    if prod == 0.0 or lp == lm or math.sin(p.mu) == 0.0:
        return None
    k_star = 1.0 / math.sqrt(abs(prod))
    t1, _ = probabilities(p, k_star)
    return k_star, float(t1)


@dataclass(frozen=True, eq=False)
class TransferMatrix:
    """Left-to-right transfer matrix at one wavenumber.

    Sends the (right-moving, left-moving) coefficient pair on the left of
    the interaction to the pair on its right.
    """

    matrix: np.ndarray
    k: float

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        if not isinstance(other, TransferMatrix):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("cannot chain transfer matrices at different k")
        return TransferMatrix(self.matrix @ other.matrix, self.k)


def transfer_matrix(p: PointInteraction, k: float) -> TransferMatrix:
    """Transfer matrix built from the scattering amplitudes.

    Raises OpaqueInteractionError for walls (|T_r| below the cutoff), where
    the matrix does not exist.
    """
    s = s_matrix(p, k)
    if abs(s.T_r) < WALL_TRANSMISSION_CUTOFF:
        raise OpaqueInteractionError(
            "interaction does not transmit; transfer matrix undefined"
        )
    m = np.array(
        [
            [1.0 / s.T_l.conjugate(), s.R_r / s.T_r],
            [-s.R_l / s.T_r, 1.0 / s.T_r],
        ]
    )
    return TransferMatrix(m, s.k)


def transfer_matrix_inverse(p: PointInteraction, k: float) -> TransferMatrix:
    """The closed-form inverse transfer matrix (right-to-left)."""
    s = s_matrix(p, k)
    if abs(s.T_r) < WALL_TRANSMISSION_CUTOFF:
        raise OpaqueInteractionError(
            "interaction does not transmit; transfer matrix undefined"
        )
    m = np.array(
        [
            [1.0 / s.T_l, -s.R_r / s.T_l],
            [s.R_l / s.T_l, 1.0 / s.T_r.conjugate()],
        ]
    )
    return TransferMatrix(m, s.k)
