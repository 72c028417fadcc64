"""Perfect-transmission search and parameter classification for a pair.

A pair transmits perfectly at wavenumber k exactly when the left reflection
amplitude of the right interaction equals the conjugate of the right
reflection amplitude of the left one.  Splitting that condition into modulus
and phase gives two complementary tools:

* the modulus condition |h(k)| = 1, with h the ratio assembled in
  :func:`h_function`, reduces to a quartic in k^2 whose coefficients depend
  only on the interaction parameters (:func:`quartic_coefficients`);

* if the quartic vanishes identically the modulus condition holds for every
  k and the parameters sit on one of a handful of families.  Each family
  turns the remaining phase condition into a tangent equation
  tan(k d) = f(k) with d the separation (:func:`resonance_rhs`).

:func:`classify` decides which situation a given pair is in, and
:func:`find_resonances` combines a pole-free tangent-root search with a
dense scan of the alignment residual so coincidence transparencies that are
not tangent roots are found as well.  Isolated quartic roots are handled by
:func:`incidental_resonance`, which also reports the separations that make
such a root an actual resonance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .compose import transmission_probability, _check_order
from .errors import (
    DegenerateDenominatorError,
    DegenerateQuarticError,
    PoleError,
    WrongClassError,
)
from .single import _amplitude_parts, _check_wavenumber, _s_components
from .u2param import PointInteraction

DEFAULT_TOL = 1e-10
RESONANCE_RESIDUAL_TOL = 1e-9
TRANSMISSION_ACCEPT = 1e-9
BISECTION_XTOL = 1e-13
PHASE_FILTER = 1e-6
MERGE_RELATIVE = 1e-8
SCAN_CANDIDATE_CUTOFF = 0.5


def resonance_residual(p1: PointInteraction, p2: PointInteraction, k):
    """|R_l of the right interaction - conj(R_r of the left)| at k.

    Zero exactly at perfect transmission.  Scalar or ndarray k.
    """
    _check_wavenumber(k)
    _check_order(p1, p2)
    r_right = _s_components(p1, k)[0]
    l_left = _s_components(p2, k)[1]
    return np.abs(l_left - np.conj(r_right))


def check_resonance(
    p1: PointInteraction, p2: PointInteraction, k: float, tol: float = RESONANCE_RESIDUAL_TOL
) -> tuple[bool, float]:
    """Whether k is a perfect-transmission point, with the raw residual."""
    res = float(resonance_residual(p1, p2, float(k)))
    return (res <= tol, res)


def h_function(p1: PointInteraction, p2: PointInteraction, k):
    """Ratio whose unit circle crossing encodes the modulus condition.

    Perfect transmission at k requires exp(2 i k d) = h(k) where d is the
    separation; h itself depends only on the interaction parameters, not on
    the positions.  Scalar or ndarray k.
    """
    _check_wavenumber(k)
    sym1, anti1, z1 = _amplitude_parts(p1, k)
    sym2, anti2, z2 = _amplitude_parts(p2, k)
    c1, c2 = math.cos(p1.mu), math.cos(p2.mu)
    num = z2 * (sym1 + 1j * k * c1 * anti1)
    den = np.conj(z1) * (sym2 + 1j * k * c2 * anti2)
    if np.any(np.abs(den) < 1e-300):
        raise DegenerateDenominatorError("h-function denominator vanished")
    return num / den


@dataclass(frozen=True)
class QuarticCoefficients:
    """Coefficients of alpha x^2 + beta x + gamma = 0 in x = k^2.

    Roots of this polynomial are the only wavenumbers where the modulus
    condition can hold off the classified families.
    """

    alpha: float
    beta: float
    gamma: float

    def k_squared_roots(self) -> tuple[float, ...]:
        """Real roots in x = k^2, ascending."""
        return _real_quadratic_roots(self.alpha, self.beta, self.gamma)

    def positive_k(self) -> tuple[float, ...]:
        """Physical wavenumbers: square roots of the positive roots."""
        return tuple(math.sqrt(x) for x in self.k_squared_roots() if x > 0.0)


def _real_quadratic_roots(a: float, b: float, c: float) -> tuple[float, ...]:
    if a == 0.0:
        if b == 0.0:
            return ()
        return (-c / b,)
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return ()
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b)) if b != 0.0 else 0.5 * sq
    if q == 0.0:
        return (0.0,)
    roots = sorted((q / a, c / q))
    return tuple(roots)


def _quartic_terms(p1: PointInteraction, p2: PointInteraction):
    """The two positive terms whose differences form each coefficient."""
    lp1, lm1 = p1.L_plus.value, p1.L_minus.value
    lp2, lm2 = p2.L_plus.value, p2.L_minus.value
    t1 = (math.sin(p1.mu) * (lp1 - lm1)) ** 2
    t2 = (math.sin(p2.mu) * (lp2 - lm2)) ** 2
    prod1, prod2 = lp1 * lm1, lp2 * lm2
    return (
        (t2 * prod1 * prod1, t1 * prod2 * prod2),
        (t2 * (lp1 * lp1 + lm1 * lm1), t1 * (lp2 * lp2 + lm2 * lm2)),
        (t2, t1),
    )


def quartic_coefficients(p1: PointInteraction, p2: PointInteraction) -> QuarticCoefficients:
    """Quartic coefficients for finite-length pairs.

    Infinite lengths never reach the quartic (classification reports them
    as unclassified with a flag), so they are rejected here.
    """
    if p1.has_infinite_length or p2.has_infinite_length:
        raise ValueError("quartic coefficients require finite lengths")
    (a2, a1), (b2, b1), (g2, g1) = _quartic_terms(p1, p2)
    return QuarticCoefficients(alpha=a2 - a1, beta=b2 - b1, gamma=g2 - g1)


def _quartic_degenerate(p1, p2, tol: float) -> bool:
    coeffs = quartic_coefficients(p1, p2)
    terms = _quartic_terms(p1, p2)
    for coef, (ta, tb) in zip((coeffs.alpha, coeffs.beta, coeffs.gamma), terms):
        if abs(coef) > tol * max(1.0, ta, tb):
            return False
    return True


class Case(enum.Enum):
    """Classification outcomes, in the order they are tested."""

    WALL = "wall"
    I = "I"
    II = "II"
    III_I = "III-i"
    III_II = "III-ii"
    III_III = "III-iii"
    III_IV = "III-iv"
    INCIDENTAL = "incidental"
    NONE = "none"


_TANGENT_CASES = {Case.I, Case.II, Case.III_I, Case.III_II, Case.III_III, Case.III_IV}


@dataclass(frozen=True)
class ResonanceClass:
    """Result of classify(): the decided case plus the matching evidence.

    ``matches`` lists every family pattern that fit within tolerance (the
    decided case is the first); ``residuals`` holds the residual of each
    defining equality that was satisfied, keyed by pattern.  For incidental
    configurations ``k_squared`` is the smallest positive quartic root.
    ``quartic_bypassed`` marks pairs with infinite lengths, which skip the
    quartic machinery entirely.
    """

    case: Case
    k_squared: float | None = None
    matches: tuple[str, ...] = ()
    residuals: dict[str, float] = field(default_factory=dict)
    quartic_bypassed: bool = False
    tol: float = DEFAULT_TOL

    @property
    def is_tangent_case(self) -> bool:
        return self.case in _TANGENT_CASES

    def to_json(self) -> dict:
        return {
            "case": self.case.value,
            "k_squared": self.k_squared,
            "matches": list(self.matches),
            "residuals": dict(self.residuals),
            "quartic_bypassed": self.quartic_bypassed,
            "tol": self.tol,
        }


def _sin_sq_residual(p1, p2, tol) -> float | None:
    s1 = math.sin(p1.mu) ** 2
    s2 = math.sin(p2.mu) ** 2
    r = abs(s2 - s1)
    return r if r <= tol * max(1.0, s1, s2) else None


def _pattern_residuals(pairs, tol) -> dict[str, float] | None:
    out = {}
    for name, lhs, rhs in pairs:
        r = lhs.isclose(rhs, tol)
        if r is None:
            return None
        out[name] = r
    return out


def classify(
    p1: PointInteraction, p2: PointInteraction, tol: float = DEFAULT_TOL
) -> ResonanceClass:
    """Decide which perfect-transmission family the pair belongs to.

    Tested in order: wall (either interaction opaque), then the mirror and
    translation families I and II, then the four cross families III-i..iv
    (which also need the sin^2 weight relation), then isolated quartic
    roots, and finally none.  A pair within tolerance of several patterns
    reports the first and lists all of them in ``matches``.
    """
    residuals: dict[str, float] = {}
    wall_hits = []
    for tag, p in (("1", p1), ("2", p2)):
        req = p.L_plus.isclose(p.L_minus, tol)
        if req is not None:
            wall_hits.append((f"wall{tag}.lengths", req))
        s = abs(math.sin(p.mu))
        if s <= tol:
            wall_hits.append((f"wall{tag}.sin_mu", s))
    if wall_hits:
        residuals.update(dict(wall_hits))
        return ResonanceClass(Case.WALL, matches=("wall",), residuals=residuals, tol=tol)

    if p1.has_infinite_length or p2.has_infinite_length:
        return ResonanceClass(Case.NONE, quartic_bypassed=True, tol=tol)

    matches: list[Case] = []
    sinsq = _sin_sq_residual(p1, p2, tol)

    if sinsq is not None:
        hit = _pattern_residuals(
            [("I.L_plus", p2.L_plus, p1.L_plus), ("I.L_minus", p2.L_minus, p1.L_minus)], tol
        )
        if hit is not None:
            matches.append(Case.I)
            residuals.update(hit)
            residuals["I.sin_sq"] = sinsq
        hit = _pattern_residuals(
            [("II.L_plus", p2.L_plus, -p1.L_minus), ("II.L_minus", p2.L_minus, -p1.L_plus)], tol
        )
        if hit is not None:
            matches.append(Case.II)
            residuals.update(hit)
            residuals["II.sin_sq"] = sinsq

    lp1, lm1 = p1.L_plus.value, p1.L_minus.value
    sl = lp1 + lm1
    lhs = sl * sl * math.sin(p2.mu) ** 2
    rhs = (lp1 - lm1) ** 2 * math.sin(p1.mu) ** 2
    weight = abs(lhs - rhs)
    if weight <= tol * max(1.0, abs(lhs), abs(rhs)):
        sub_patterns = [
            (Case.III_I, p1.L_minus, -p1.L_plus, sl > 0.0),
            (Case.III_II, -p1.L_plus, p1.L_minus, sl < 0.0),
            (Case.III_III, p1.L_plus, -p1.L_minus, sl > 0.0),
            (Case.III_IV, -p1.L_minus, p1.L_plus, sl < 0.0),
        ]
        for case, want_plus, want_minus, sign_ok in sub_patterns:
            if not sign_ok:
                continue
            hit = _pattern_residuals(
                [
                    (f"{case.value}.L_plus", p2.L_plus, want_plus),
                    (f"{case.value}.L_minus", p2.L_minus, want_minus),
                ],
                tol,
            )
            if hit is not None:
                matches.append(case)
                residuals.update(hit)
                residuals[f"{case.value}.weight"] = weight

    if matches:
        return ResonanceClass(
            matches[0],
            matches=tuple(m.value for m in matches),
            residuals=residuals,
            tol=tol,
        )

    if _quartic_degenerate(p1, p2, tol):
        # modulus condition holds everywhere but no printed pattern fit
        return ResonanceClass(
            Case.NONE, matches=("quartic-degenerate",), residuals=residuals, tol=tol
        )
    positive_sq = [x for x in quartic_coefficients(p1, p2).k_squared_roots() if x > 0.0]
    if positive_sq:
        return ResonanceClass(
            Case.INCIDENTAL,
            k_squared=positive_sq[0],
            matches=("incidental",),
            residuals=residuals,
            tol=tol,
        )
    return ResonanceClass(Case.NONE, residuals=residuals, tol=tol)


def _equation_parts(case: Case, p1: PointInteraction, p2: PointInteraction, k):
    """Numerator and denominator of the tangent right-hand side at k.

    Works for scalar or ndarray k.  The equal/opposite cos(mu) branch is
    chosen by whichever sign relation the angles actually satisfy.
    """
    c1, c2 = math.cos(p1.mu), math.cos(p2.mu)
    lp, lm = p1.L_plus.value, p1.L_minus.value
    dl, sl, prod = lp - lm, lp + lm, lp * lm
    cos_equal = abs(c1 - c2) <= abs(c1 + c2)

    if case is Case.I:
        if cos_equal:
            return k * sl, 1.0 - (k * k) * prod
        num = k * (sl * (1.0 + (k * k) * prod) + c1 * dl * (1.0 - (k * k) * prod))
        den = 1.0 - (k ** 4) * prod * prod - (k * k) * c1 * sl * dl
        return num, den
    if case is Case.II:
        if cos_equal:
            return k * 0.0, np.ones_like(np.asarray(k, dtype=float)) if np.ndim(k) else 1.0
        return k * c1 * dl, 1.0 + (k * k) * prod
    if case in (Case.III_I, Case.III_II):
        base = c1 * dl + c2 * sl if case is Case.III_I else c1 * dl - c2 * sl
        num = k * lm * base - 2.0 * k * prod
        den = base + 2.0 * (k * k) * lp * lm * lm
        return num, den
    if case in (Case.III_III, Case.III_IV):
        base = c1 * dl + c2 * sl if case is Case.III_III else c1 * dl - c2 * sl
        num = k * lp * base - 2.0 * k * prod
        den = base + 2.0 * (k * k) * lp * lp * lm
        return num, den
    raise WrongClassError(f"no tangent equation for case {case.value!r}")


def resonance_rhs(
    rc: ResonanceClass, p1: PointInteraction, p2: PointInteraction, k: float
) -> float:
    """Right-hand side f(k) of tan(k d) = f(k) for a classified pair."""
    if not rc.is_tangent_case:
        raise WrongClassError(
            f"case {rc.case.value!r} has no tangent resonance equation"
        )
    _check_wavenumber(k)
    num, den = _equation_parts(rc.case, p1, p2, float(k))
    if abs(den) < 1e-300:
        raise PoleError(float(k))
    return float(num) / float(den)


@dataclass(frozen=True)
class ResonanceRoot:
    """One accepted perfect-transmission wavenumber.

    ``branch_index`` is the pi-branch of the tangent the root came from;
    -1 marks roots contributed by the dense residual scan.
    """

    k: float
    residual_T2: float
    branch_index: int


def _bisect(f, lo: float, hi: float, flo: float, fhi: float) -> float:
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    while hi - lo > BISECTION_XTOL:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) != (fmid < 0.0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _tangent_candidates(rc, p1, p2, ks, d):
    num, den = _equation_parts(rc.case, p1, p2, ks)
    g = den * np.sin(ks * d) - num * np.cos(ks * d)

    def g_at(kk: float) -> float:
        n, dn = _equation_parts(rc.case, p1, p2, kk)
        return float(dn) * math.sin(kk * d) - float(n) * math.cos(kk * d)

    roots = []
    for i in np.nonzero(g == 0.0)[0]:
        roots.append(float(ks[i]))
    for i in np.nonzero(g[:-1] * g[1:] < 0.0)[0]:
        roots.append(_bisect(g_at, float(ks[i]), float(ks[i + 1]), float(g[i]), float(g[i + 1])))

    out = []
    for root in roots:
        # squaring the modulus condition admits exp(2ikd) = -h; drop those
        try:
            spurious = abs(np.exp(2j * root * d) - h_function(p1, p2, root)) > PHASE_FILTER
        except DegenerateDenominatorError:
            spurious = False  # let the transmission gate decide
        if spurious:
            continue
        branch = int(math.floor(root * d / math.pi + 1e-9))
        out.append((root, branch))
    return out


def _scan_candidates(p1, p2, ks):
    res = resonance_residual(p1, p2, ks)

    def sq_residual(kk: float) -> float:
        r = float(resonance_residual(p1, p2, kk))
        return r * r

    def difference(kk: float) -> complex:
        return complex(_s_components(p2, kk)[1] - np.conj(_s_components(p1, kk)[0]))

    interior = np.nonzero(
        (res[1:-1] <= res[:-2]) & (res[1:-1] <= res[2:]) & (res[1:-1] < SCAN_CANDIDATE_CUTOFF)
    )[0]
    out = []
    for i in interior + 1:
        lo, hi = float(ks[i - 1]), float(ks[i + 1])
        opt = minimize_scalar(
            sq_residual, bounds=(lo, hi), method="bounded", options={"xatol": 1e-12}
        )
        k0 = float(opt.x)
        # |difference| is V-shaped at a root, which strands the minimizer
        # on its rounding-noise floor around 1e-8.  The difference itself
        # moves through zero along a line in the complex plane, so its
        # projection onto the secant direction is a signed function that a
        # bisection pass drives to full precision.
        vlo, vhi = difference(lo), difference(hi)
        direction = vhi - vlo
        if abs(direction) > 0.0:
            u = (direction / abs(direction)).conjugate()

            def projected(kk: float) -> float:
                return (difference(kk) * u).real

            flo, fhi = (vlo * u).real, (vhi * u).real
            if (flo < 0.0) != (fhi < 0.0):
                polished = _bisect(projected, lo, hi, flo, fhi)
                if sq_residual(polished) <= opt.fun:
                    k0 = polished
        out.append((k0, -1))
    return out


def find_resonances(
    p1: PointInteraction,
    p2: PointInteraction,
    k_min: float = 1e-3,
    k_max: float = 10.0,
    grid: int = 20000,
    tol: float = DEFAULT_TOL,
) -> list[ResonanceRoot]:
    """All perfect-transmission wavenumbers in [k_min, k_max].

    For classified pairs the tangent equation is solved in the pole-free
    form D(k) sin(kd) - N(k) cos(kd) = 0 by bracketing on the grid and
    bisection, then filtered through the full phase condition.  A dense
    scan of the alignment residual always runs as well, which is what picks
    up coincidence transparencies that are not tangent roots.  Accepted
    roots transmit within 1e-9 of unity; duplicates are merged.
    """
    if not (0.0 < k_min < k_max) or not math.isfinite(k_max):
        raise ValueError("need 0 < k_min < k_max, both finite")
    if grid < 2:
        raise ValueError("grid must have at least 2 points")
    _check_order(p1, p2)

    rc = classify(p1, p2, tol)
    if rc.case is Case.WALL:
        return []

    ks = np.linspace(k_min, k_max, grid)
    d = p2.xi - p1.xi
    candidates = []
    if rc.is_tangent_case:
        candidates.extend(_tangent_candidates(rc, p1, p2, ks, d))
    candidates.extend(_scan_candidates(p1, p2, ks))

    accepted = []
    for k0, branch in candidates:
        if not (k_min <= k0 <= k_max):
            continue
        resid = abs(1.0 - float(transmission_probability(p1, p2, k0)))
        if resid <= TRANSMISSION_ACCEPT:
            accepted.append(ResonanceRoot(k0, resid, branch))

    accepted.sort(key=lambda r: (r.k, r.branch_index < 0))
    merged: list[ResonanceRoot] = []
    for root in accepted:
        if merged and abs(root.k - merged[-1].k) <= MERGE_RELATIVE * max(1.0, root.k):
            # keep the tangent-branch record over a scan duplicate
            if merged[-1].branch_index < 0 and root.branch_index >= 0:
                merged[-1] = root
            continue
        merged.append(root)
    return merged


@dataclass(frozen=True)
class IncidentalResonance:
    """An isolated quartic root with the separations that realize it."""

    k: float
    spacings: tuple[float, ...]


def incidental_resonance(
    p1: PointInteraction,
    p2: PointInteraction,
    n_spacings: int = 5,
    tol: float = DEFAULT_TOL,
) -> tuple[IncidentalResonance, ...] | None:
    """Isolated modulus-condition roots and their resonant separations.

    For each positive root k of the quartic the phase condition picks the
    discrete separations d_n = (arg h(k) + 2 pi n) / (2 k); the first
    ``n_spacings`` positive ones are returned.  Returns None when the
    quartic has no positive root.  Raises DegenerateQuarticError when all
    coefficients vanish (the pair is a classified family instead).
    """
    if _quartic_degenerate(p1, p2, tol):
        raise DegenerateQuarticError(
            "quartic vanishes identically; use classify/find_resonances"
        )
    if n_spacings < 1:
        raise ValueError("n_spacings must be at least 1")
    roots = quartic_coefficients(p1, p2).positive_k()
    if not roots:
        return None
    out = []
    for k in roots:
        arg = float(np.angle(h_function(p1, p2, k)))
        first = 0 if arg > 0.0 else 1
        spacings = tuple(
            (arg + 2.0 * math.pi * n) / (2.0 * k)
            for n in range(first, first + n_spacings)
        )
        out.append(IncidentalResonance(k=k, spacings=spacings))
    return tuple(out)
