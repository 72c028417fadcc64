"""U(2) parametrization of a point interaction on a line.

A zero-range interaction sitting at position ``xi`` is fixed by a 2x2 unitary
matrix acting in the connection conditions that join the wavefunction and its
derivative across the point.  The matrix is parametrized by two eigenphases
``theta_plus, theta_minus`` and the angles ``mu, nu`` of the diagonalizing
rotation,

    U = V^dag diag(exp(i theta_plus), exp(i theta_minus)) V,
    V = exp(i (mu/2) sigma_y) exp(i (nu/2) sigma_z).

The eigenphases enter all scattering formulas only through cot-type lengths

    L = L0 * cot(theta / 2),

so the working representation of an interaction is the ordered length pair
``(L_plus, L_minus)`` together with ``(mu, nu)`` and the position.  The scale
``L0`` is a unit choice and is fixed to 1 throughout; conversions accept any
positive ``L0`` and absorb it into the lengths.

Lengths can be +inf or -inf (the eigenphase approaching 0 from either side).
These are kept as explicit tags, never as float('inf') sentinels, and every
consumer goes through :meth:`ExtendedLength.projective`, the normalized pair
``(a, b) = (sin(theta/2), cos(theta/2))`` which is finite for every tag.  The
two infinite tags describe the same unitary matrix; they stay distinct only
so the canonical ordering ``L_plus >= L_minus`` is well defined.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Mapping

import numpy as np

from .errors import BadOrderingError, NotUnitaryError

TWO_PI = 2.0 * math.pi

_FINITE = "finite"
_POSINF = "+inf"
_NEGINF = "-inf"


def _mod_two_pi(x: float) -> float:
    r = math.fmod(x, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:  # fmod rounding can land exactly on 2*pi
        r = 0.0
    return r


@total_ordering
@dataclass(frozen=True)
class ExtendedLength:
    """A cot-type length, either finite or a signed infinity.

    ``kind`` is one of ``"finite"``, ``"+inf"``, ``"-inf"``; ``value`` is
    meaningful only for the finite kind.  Ordering puts ``-inf`` below every
    finite value and ``+inf`` above.
    """

    kind: str
    value: float = 0.0

    def __post_init__(self):
        if self.kind not in (_FINITE, _POSINF, _NEGINF):
            raise ValueError(f"unknown length kind {self.kind!r}")
        if self.kind == _FINITE:
            if not math.isfinite(self.value):
                raise ValueError("finite length must hold a finite value")
            object.__setattr__(self, "value", float(self.value))
        elif self.value != 0.0:
            object.__setattr__(self, "value", 0.0)

    @staticmethod
    def finite(value: float) -> "ExtendedLength":
        return ExtendedLength(_FINITE, float(value))

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind != _FINITE

    def projective(self) -> tuple[float, float]:
        """Normalized pair ``(a, b)`` with ``a >= 0``, ``a^2 + b^2 = 1``.

        A finite length L maps to ``(1, L)/sqrt(1 + L^2)``; the infinities
        map to ``(0, +1)`` and ``(0, -1)``.  Every scattering formula in this
        package is degree balanced in ``(a, b)``, so the pair can stand in
        for L without any large-magnitude thresholds.
        """
        if self.kind == _POSINF:
            return (0.0, 1.0)
        if self.kind == _NEGINF:
            return (0.0, -1.0)
        h = math.hypot(1.0, self.value)
        return (1.0 / h, self.value / h)

    def _order_key(self) -> tuple[int, float]:
        if self.kind == _POSINF:
            return (1, 0.0)
        if self.kind == _NEGINF:
            return (-1, 0.0)
        return (0, self.value)

    def __lt__(self, other: "ExtendedLength") -> bool:
        if not isinstance(other, ExtendedLength):
            return NotImplemented
        return self._order_key() < other._order_key()

    def __neg__(self) -> "ExtendedLength":
        if self.kind == _POSINF:
            return NEG_INF
        if self.kind == _NEGINF:
            return POS_INF
        return ExtendedLength.finite(-self.value)

    def __float__(self) -> float:
        if self.kind == _POSINF:
            return math.inf
        if self.kind == _NEGINF:
            return -math.inf
        return self.value

    def isclose(self, other: "ExtendedLength", tol: float) -> float | None:
        """Residual of the equality test against ``other``, or None on a
        tag mismatch.  Finite values compare as |x - y| <= tol * max(1, ...);
        infinities only ever equal the same tag (residual 0)."""
        if self.is_infinite or other.is_infinite:
            return 0.0 if self.kind == other.kind else None
        scale = max(1.0, abs(self.value), abs(other.value))
        r = abs(self.value - other.value)
        return r if r <= tol * scale else None

    def to_json(self) -> float | str:
        if self.kind == _POSINF:
            return "inf"
        if self.kind == _NEGINF:
            return "-inf"
        return self.value

    def __str__(self) -> str:
        return str(self.to_json())


POS_INF = ExtendedLength(_POSINF)
NEG_INF = ExtendedLength(_NEGINF)


def as_length(x) -> ExtendedLength:
    """Coerce a float, int, 'inf'/'-inf' string or ExtendedLength."""
    if isinstance(x, ExtendedLength):
        return x
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity", "+infinity"):
            return POS_INF
        if s in ("-inf", "-infinity"):
            return NEG_INF
        x = float(s)
    if isinstance(x, (int, float, np.floating, np.integer)):
        x = float(x)
        if math.isinf(x):
            return POS_INF if x > 0 else NEG_INF
        if math.isnan(x):
            raise ValueError("length cannot be NaN")
        return ExtendedLength.finite(x)
    raise TypeError(f"cannot interpret {x!r} as a length")


@dataclass(frozen=True)
class U2Params:
    """Angle-form parameters of the characteristic unitary matrix.

    ``theta_plus`` and ``theta_minus`` live in [0, 2*pi), ``mu`` in [0, pi],
    ``nu`` in [0, 2*pi) (normalized on input).  ``L0`` is the length unit
    used when converting eigenphases to lengths.
    """

    theta_plus: float
    theta_minus: float
    mu: float
    nu: float = 0.0
    L0: float = 1.0

    def __post_init__(self):
        for name in ("theta_plus", "theta_minus"):
            th = float(getattr(self, name))
            if not (0.0 <= th < TWO_PI) or not math.isfinite(th):
                raise ValueError(f"{name} must lie in [0, 2*pi), got {th!r}")
            object.__setattr__(self, name, th)
        mu = float(self.mu)
        if not (0.0 <= mu <= math.pi):
            raise ValueError(f"mu must lie in [0, pi], got {mu!r}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", _mod_two_pi(float(self.nu)))
        L0 = float(self.L0)
        if not (L0 > 0.0 and math.isfinite(L0)):
            raise ValueError(f"L0 must be a positive finite scale, got {L0!r}")
        object.__setattr__(self, "L0", L0)


@dataclass(frozen=True)
class PointInteraction:
    """A single point interaction in length form at position ``xi``.

    Instances are canonical: ``L_plus >= L_minus`` in the extended order.
    Use :func:`canonicalize` to build one from an unordered pair; it applies
    the double-cover identity so the physics is unchanged by the swap.
    """

    L_plus: ExtendedLength
    L_minus: ExtendedLength
    mu: float
    nu: float = 0.0
    xi: float = 0.0

    def __post_init__(self):
        lp = as_length(self.L_plus)
        lm = as_length(self.L_minus)
        if lp < lm:
            raise BadOrderingError(
                "L_plus < L_minus violates the canonical ordering; "
                "build the interaction through canonicalize()"
            )
        object.__setattr__(self, "L_plus", lp)
        object.__setattr__(self, "L_minus", lm)
        mu = float(self.mu)
        if not (0.0 <= mu <= math.pi):
            raise ValueError(f"mu must lie in [0, pi], got {mu!r}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", _mod_two_pi(float(self.nu)))
        xi = float(self.xi)
        if not math.isfinite(xi):
            raise ValueError("position xi must be finite")
        object.__setattr__(self, "xi", xi)

    @property
    def has_infinite_length(self) -> bool:
        return self.L_plus.is_infinite or self.L_minus.is_infinite

    def shifted(self, dx: float) -> "PointInteraction":
        return PointInteraction(self.L_plus, self.L_minus, self.mu, self.nu, self.xi + dx)


def canonicalize(L_plus, L_minus, mu: float, nu: float = 0.0, xi: float = 0.0) -> PointInteraction:
    """Build a PointInteraction, swapping into the canonical order.

    Exchanging the two lengths together with mu -> pi - mu, nu -> nu + pi
    leaves the characteristic matrix (and therefore all scattering data)
    unchanged, so the swap is pure bookkeeping.
    """
    lp, lm = as_length(L_plus), as_length(L_minus)
    mu, nu = float(mu), float(nu)
    if not (0.0 <= mu <= math.pi):
        raise ValueError(f"mu must lie in [0, pi], got {mu!r}")
    if lp < lm:
        lp, lm = lm, lp
        mu = math.pi - mu
        nu = nu + math.pi
    return PointInteraction(lp, lm, mu, nu, xi)


def lengths_from_angles(p: U2Params) -> tuple[ExtendedLength, ExtendedLength]:
    """Map the eigenphases to the cot-type length pair, L = L0 cot(theta/2).

    theta = 0 gives the positive infinite tag; theta = pi gives exactly 0.
    The map is monotone decreasing on (0, 2*pi), so theta_plus <= theta_minus
    is equivalent to L_plus >= L_minus.
    """
    return (
        _length_from_theta(p.theta_plus, p.L0),
        _length_from_theta(p.theta_minus, p.L0),
    )


def _length_from_theta(theta: float, L0: float) -> ExtendedLength:
    if theta == 0.0:
        return POS_INF
    if theta == math.pi:
        return ExtendedLength.finite(0.0)
    half = 0.5 * theta
    return ExtendedLength.finite(L0 * math.cos(half) / math.sin(half))


def angles_from_lengths(p: PointInteraction, L0: float = 1.0) -> U2Params:
    """Inverse of :func:`lengths_from_angles` up to the infinite-tag merge.

    Both infinite tags map to eigenphase 0 (they describe the same matrix).
    """
    return U2Params(
        _theta_from_length(p.L_plus, L0),
        _theta_from_length(p.L_minus, L0),
        p.mu,
        p.nu,
        L0,
    )


def _theta_from_length(L: ExtendedLength, L0: float) -> float:
    if L.is_infinite:
        return 0.0
    # atan2(L0, L) is half the eigenphase, already in (0, pi) for L0 > 0
    return 2.0 * math.atan2(L0, L.value)


def characteristic_matrix(p: U2Params) -> np.ndarray:
    """The 2x2 unitary built from the eigenphases and rotation angles."""
    ep = cmath.exp(1j * p.theta_plus)
    em = cmath.exp(1j * p.theta_minus)
    s, c = math.sin(p.mu), math.cos(p.mu)
    env = cmath.exp(1j * p.nu)
    tot, diff = ep + em, ep - em
    return 0.5 * np.array(
        [
            [tot + c * diff, s * diff / env],
            [s * diff * env, tot - c * diff],
        ],
        dtype=complex,
    )


def swap_eigenphases(p: U2Params) -> U2Params:
    """The double-cover twin: exchanged eigenphases with mu -> pi - mu,
    nu -> nu + pi.  Produces the same characteristic matrix."""
    return U2Params(
        p.theta_minus,
        p.theta_plus,
        math.pi - p.mu,
        p.nu + math.pi,
        p.L0,
    )


def unitarity_defect(U: np.ndarray) -> float:
    """Largest entrywise deviation of U^dag U from the identity."""
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {U.shape}")
    return float(np.max(np.abs(U.conj().T @ U - np.eye(2))))


def decompose(U: np.ndarray, tol: float = 1e-10) -> U2Params:
    """Recover angle-form parameters from a 2x2 unitary matrix.

    The eigenphases are assigned so the resulting length pair is canonical
    (smaller phase first, since cot is decreasing).  For a scalar matrix the
    rotation is undetermined and the convention mu = 0, nu = 0 is returned.

    Raises NotUnitaryError when the unitarity defect exceeds ``tol``.
    """
    U = np.asarray(U, dtype=complex)
    defect = unitarity_defect(U)
    if defect > tol:
        raise NotUnitaryError(
            f"matrix is not unitary within {tol:g} (defect {defect:.3e})"
        )

    tr = U[0, 0] + U[1, 1]
    det = U[0, 0] * U[1, 1] - U[0, 1] * U[1, 0]
    sq = cmath.sqrt(tr * tr - 4.0 * det)
    # pick the branch that adds constructively to the trace
    if (tr.real * sq.real + tr.imag * sq.imag) < 0.0:
        sq = -sq
    lam1 = 0.5 * (tr + sq)
    lam2 = det / lam1 if lam1 != 0 else 0.5 * (tr - sq)

    if abs(lam1 - lam2) <= 1e-12:
        theta = _mod_two_pi(cmath.phase(0.5 * tr))
        return U2Params(theta, theta, 0.0, 0.0)

    th1 = _mod_two_pi(cmath.phase(lam1))
    th2 = _mod_two_pi(cmath.phase(lam2))
    if th1 <= th2:
        theta_plus, theta_minus, lam_plus = th1, th2, lam1
    else:
        theta_plus, theta_minus, lam_plus = th2, th1, lam2

    # kernel vector of (U - lam I) from whichever row is better conditioned
    va = np.array([U[0, 1], lam_plus - U[0, 0]])
    vb = np.array([lam_plus - U[1, 1], U[1, 0]])
    v = va if np.linalg.norm(va) >= np.linalg.norm(vb) else vb
    v = v / np.linalg.norm(v)

    mu = 2.0 * math.atan2(abs(v[1]), abs(v[0]))
    cross = v[1] * np.conj(v[0])
    nu = _mod_two_pi(cmath.phase(cross)) if cross != 0 else 0.0
    return U2Params(theta_plus, theta_minus, mu, nu)


def interaction_from_json(obj: Mapping) -> PointInteraction:
    """Parse one interaction from its JSON dict.

    Length form: {"L_plus": num|"inf"|"-inf", "L_minus": ..., "mu": rad,
    "nu": rad, "xi": num}; angle form uses "theta_plus"/"theta_minus" plus
    optional "L0".  "nu" and "xi" default to 0.
    """
    if "theta_plus" in obj or "theta_minus" in obj:
        params = U2Params(
            float(obj["theta_plus"]),
            float(obj["theta_minus"]),
            float(obj["mu"]),
            float(obj.get("nu", 0.0)),
            float(obj.get("L0", 1.0)),
        )
        lp, lm = lengths_from_angles(params)
        return canonicalize(lp, lm, params.mu, params.nu, float(obj.get("xi", 0.0)))
    missing = {"L_plus", "L_minus", "mu"} - set(obj)
    if missing:
        raise ValueError(f"interaction JSON missing keys: {sorted(missing)}")
    return canonicalize(
        as_length(obj["L_plus"]),
        as_length(obj["L_minus"]),
        float(obj["mu"]),
        float(obj.get("nu", 0.0)),
        float(obj.get("xi", 0.0)),
    )


def interaction_to_json(p: PointInteraction) -> dict:
    return {
        "L_plus": p.L_plus.to_json(),
        "L_minus": p.L_minus.to_json(),
        "mu": p.mu,
        "nu": p.nu,
        "xi": p.xi,
    }
