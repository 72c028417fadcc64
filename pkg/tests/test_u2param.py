"""Length parametrization, characteristic matrices, and the decomposition."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import pointscatter as ps
from pointscatter import (
    NEG_INF,
    POS_INF,
    BadOrderingError,
    ExtendedLength,
    NotUnitaryError,
    PointInteraction,
    U2Params,
    angles_from_lengths,
    as_length,
    canonicalize,
    characteristic_matrix,
    decompose,
    interaction_from_json,
    interaction_to_json,
    lengths_from_angles,
    swap_eigenphases,
    unitarity_defect,
)


def factored_matrix(p):
    """V† D V built term by term, independent of the packaged closed form."""
    rot = np.array(
        [
            [math.cos(p.mu / 2), math.sin(p.mu / 2)],
            [-math.sin(p.mu / 2), math.cos(p.mu / 2)],
        ]
    )
    phase = np.diag([np.exp(1j * p.nu / 2), np.exp(-1j * p.nu / 2)])
    v = rot @ phase
    d = np.diag([np.exp(1j * p.theta_plus), np.exp(1j * p.theta_minus)])
    return v.conj().T @ d @ v


def random_params(rng):
    return U2Params(
        rng.uniform(0.0, 2.0 * math.pi),
        rng.uniform(0.0, 2.0 * math.pi),
        rng.uniform(0.0, math.pi),
        rng.uniform(0.0, 2.0 * math.pi),
    )


def test_extended_length_total_order():
    vals = [NEG_INF, as_length(-4.0), as_length(0.0), as_length(2.5), POS_INF]
    assert sorted([vals[3], vals[0], vals[4], vals[2], vals[1]]) == vals
    assert POS_INF > as_length(1e300)
    assert NEG_INF < as_length(-1e300)
    assert as_length(1.5) == as_length(1.5)
    assert not POS_INF < POS_INF


def test_as_length_coercions():
    assert as_length(math.inf) is POS_INF
    assert as_length(-math.inf) is NEG_INF
    assert as_length("inf") is POS_INF
    assert as_length("-inf") is NEG_INF
    assert float(as_length(2.5)) == 2.5
    assert float(POS_INF) == math.inf
    assert float(NEG_INF) == -math.inf
    assert -as_length(1.25) == as_length(-1.25)
    assert -POS_INF is NEG_INF


def test_projective_coordinates_are_normalized():
    for L in (-7.3, -0.5, 0.0, 0.25, 42.0):
        a, b = as_length(L).projective()
        assert a * a + b * b == pytest.approx(1.0, abs=1e-15)
        assert b == pytest.approx(L * a, abs=1e-12)
        assert a > 0.0
    assert POS_INF.projective() == (0.0, 1.0)
    assert NEG_INF.projective() == (0.0, -1.0)


def test_isclose_returns_residual_or_none():
    assert as_length(2.5).isclose(as_length(2.5), 1e-10) == 0.0
    r = as_length(2.5).isclose(as_length(2.5 + 1e-12), 1e-10)
    assert r is not None and r < 1e-11
    assert as_length(2.5).isclose(as_length(2.6), 1e-10) is None
    assert as_length(2.5).isclose(POS_INF, 1e-10) is None
    assert POS_INF.isclose(POS_INF, 1e-10) == 0.0
    assert POS_INF.isclose(NEG_INF, 1e-10) is None


def test_lengths_from_angles_endpoints():
    # theta = 0 is the infinite-length tag, theta = pi exactly zero
    p = U2Params(0.0, math.pi, 0.3)
    lp, lm = lengths_from_angles(p)
    assert lp is POS_INF
    assert float(lm) == 0.0
    # generic angle follows the cotangent rule
    p = U2Params(1.0, 2.0, 0.3)
    lp, lm = lengths_from_angles(p)
    assert float(lp) == pytest.approx(1.0 / math.tan(0.5), rel=1e-15)
    assert float(lm) == pytest.approx(1.0 / math.tan(1.0), rel=1e-15)


def test_angles_from_lengths_infinite_tags_share_theta_zero():
    a = angles_from_lengths(canonicalize(POS_INF, 1.0, 0.5))
    assert a.theta_plus == 0.0
    b = angles_from_lengths(canonicalize(1.0, NEG_INF, 0.5))
    assert b.theta_minus == 0.0
    # the tag reproduces the same matrix as writing theta = 0 by hand
    by_tag = characteristic_matrix(angles_from_lengths(canonicalize(POS_INF, 1.0, 0.5)))
    by_angle = characteristic_matrix(U2Params(0.0, 2.0 * math.atan2(1.0, 1.0), 0.5))
    assert np.max(np.abs(by_tag - by_angle)) == 0.0


def test_characteristic_matrix_matches_factored_product(rng):
    worst = 0.0
    for _ in range(300):
        p = random_params(rng)
        delta = np.abs(characteristic_matrix(p) - factored_matrix(p))
        worst = max(worst, float(np.max(delta)))
    assert worst < 1e-14


def test_characteristic_matrix_is_unitary(rng):
    for _ in range(100):
        assert unitarity_defect(characteristic_matrix(random_params(rng))) < 1e-14


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_decompose_round_trip(seed):
    rng = np.random.default_rng(seed)
    p = random_params(rng)
    u = characteristic_matrix(p)
    q = decompose(u)
    assert np.max(np.abs(characteristic_matrix(q) - u)) < 5e-13
    # decompose always reports the canonically ordered length pair
    lp, lm = lengths_from_angles(q)
    assert not lp < lm


def test_decompose_named_matrices():
    q = decompose(np.diag([1j, -1j]))
    assert q.theta_plus == pytest.approx(math.pi / 2, abs=1e-15)
    assert q.theta_minus == pytest.approx(3 * math.pi / 2, abs=1e-15)
    assert q.mu == 0.0

    # scalar matrix: degenerate eigenphases, rotation set to zero by convention
    q = decompose(np.exp(1j * math.pi / 3) * np.eye(2))
    assert q.theta_plus == pytest.approx(math.pi / 3, abs=1e-15)
    assert q.theta_minus == pytest.approx(math.pi / 3, abs=1e-15)
    assert q.mu == 0.0 and q.nu == 0.0


def test_decompose_rejects_nonunitary():
    with pytest.raises(NotUnitaryError):
        decompose(np.array([[1.0, 0.1], [0.0, 1.0]]))
    with pytest.raises(NotUnitaryError):
        decompose(1.0000002 * np.eye(2))


def test_swap_eigenphases_preserves_matrix(rng):
    for _ in range(200):
        p = random_params(rng)
        q = swap_eigenphases(p)
        assert q.theta_plus == p.theta_minus and q.theta_minus == p.theta_plus
        delta = np.abs(characteristic_matrix(p) - characteristic_matrix(q))
        assert np.max(delta) < 1e-14


def test_canonicalize_swaps_unordered_input():
    p = canonicalize(1.0, 2.0, math.pi / 3, 0.0)
    assert float(p.L_plus) == 2.0 and float(p.L_minus) == 1.0
    assert p.mu == pytest.approx(2 * math.pi / 3, abs=1e-15)
    assert p.nu == pytest.approx(math.pi, abs=1e-15)
    # the swap is invisible at the matrix level
    swapped = characteristic_matrix(angles_from_lengths(p))
    theta1 = 2.0 * math.atan2(1.0, 1.0)
    theta2 = 2.0 * math.atan2(1.0, 2.0)
    original = characteristic_matrix(U2Params(theta1, theta2, math.pi / 3, 0.0))
    assert np.max(np.abs(swapped - original)) < 1e-15


def test_canonicalize_keeps_ordered_input():
    p = canonicalize(2.0, 1.0, math.pi / 3, 0.4, 0.7)
    assert float(p.L_plus) == 2.0 and float(p.L_minus) == 1.0
    assert p.mu == math.pi / 3 and p.nu == 0.4 and p.xi == 0.7


def test_point_interaction_validation():
    with pytest.raises(BadOrderingError):
        PointInteraction(as_length(1.0), as_length(2.0), 0.5)
    with pytest.raises(ValueError):
        PointInteraction(as_length(2.0), as_length(1.0), -0.1)
    with pytest.raises(ValueError):
        PointInteraction(as_length(2.0), as_length(1.0), math.pi + 0.1)
    with pytest.raises(ValueError):
        PointInteraction(as_length(2.0), as_length(1.0), 0.5, 0.0, math.inf)
    # nu is stored modulo 2 pi
    p = PointInteraction(as_length(2.0), as_length(1.0), 0.5, 2.0 * math.pi + 0.3)
    assert p.nu == pytest.approx(0.3, abs=1e-12)


def test_has_infinite_length_flag():
    assert canonicalize(POS_INF, 0.0, 1.0).has_infinite_length
    assert canonicalize(0.0, NEG_INF, 1.0).has_infinite_length
    assert not canonicalize(5.0, -5.0, 1.0).has_infinite_length


def test_shifted_moves_only_position():
    p = canonicalize(1.0, 0.0, 1.0, 0.2, 0.5)
    q = p.shifted(0.25)
    assert q.xi == 0.75
    assert (q.L_plus, q.L_minus, q.mu, q.nu) == (p.L_plus, p.L_minus, p.mu, p.nu)


def test_interaction_json_round_trip():
    p = canonicalize(POS_INF, -1.0, 1.0, 0.3, 0.5)
    q = interaction_from_json(interaction_to_json(p))
    assert q == p

    q = interaction_from_json({"L_plus": 2.0, "L_minus": 0.5, "mu": 1.1})
    assert q.nu == 0.0 and q.xi == 0.0

    # angle form goes through the cotangent map
    q = interaction_from_json(
        {"theta_plus": 1.0, "theta_minus": 2.0, "mu": 0.7, "xi": 0.3}
    )
    assert float(q.L_plus) == pytest.approx(1.0 / math.tan(0.5), rel=1e-15)
    assert q.xi == 0.3

    with pytest.raises(ValueError):
        interaction_from_json({"L_plus": 2.0, "mu": 1.1})


def test_u2params_validation():
    with pytest.raises(ValueError):
        U2Params(-0.1, 1.0, 0.5)
    with pytest.raises(ValueError):
        U2Params(1.0, 2.0 * math.pi, 0.5)
    with pytest.raises(ValueError):
        U2Params(1.0, 1.0, -0.5)
    with pytest.raises(ValueError):
        U2Params(1.0, 1.0, 0.5, 0.0, 0.0)  # L0 must be positive
