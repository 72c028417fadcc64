"""Plane-wave scattering on one or two point interactions on a line.

The package models zero-range interactions parametrized by a 2x2 unitary
characteristic matrix, computes single- and two-interaction scattering
amplitudes, locates every perfect-transmission wavenumber of a pair, and
classifies parameter configurations into the families where perfect
transmission persists over whole wavenumber branches.
"""

from .compose import (
    SeriesExpansion,
    TwoPointSolution,
    chain_transfer,
    interference_series,
    scattering_from_transfer,
    transmission_probability,
    two_point_amplitudes,
)
from .direct_solver import LinearSystem4, assemble, probability_current, solve_direct
from .errors import (
    BadOrderingError,
    DegenerateDenominatorError,
    DegenerateQuarticError,
    IllConditionedError,
    NonPositiveWavenumberError,
    NotUnitaryError,
    OpaqueInteractionError,
    PointScatterError,
    PoleError,
    WrongClassError,
)
from .resonance import (
    Case,
    IncidentalResonance,
    QuarticCoefficients,
    ResonanceClass,
    ResonanceRoot,
    check_resonance,
    classify,
    find_resonances,
    h_function,
    incidental_resonance,
    quartic_coefficients,
    resonance_residual,
    resonance_rhs,
)
from .single import (
    ScatteringMatrix,
    TransferMatrix,
    probabilities,
    s_matrix,
    transfer_matrix,
    transfer_matrix_inverse,
    transmission_peak,
)
from .u2param import (
    NEG_INF,
    POS_INF,
    ExtendedLength,
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

__version__ = "0.1.0"

__all__ = [
    "BadOrderingError",
    "Case",
    "DegenerateDenominatorError",
    "DegenerateQuarticError",
    "ExtendedLength",
    "IllConditionedError",
    "IncidentalResonance",
    "LinearSystem4",
    "NEG_INF",
    "NonPositiveWavenumberError",
    "NotUnitaryError",
    "OpaqueInteractionError",
    "POS_INF",
    "PointInteraction",
    "PointScatterError",
    "PoleError",
    "QuarticCoefficients",
    "ResonanceClass",
    "ResonanceRoot",
    "ScatteringMatrix",
    "SeriesExpansion",
    "TransferMatrix",
    "TwoPointSolution",
    "U2Params",
    "WrongClassError",
    "angles_from_lengths",
    "as_length",
    "assemble",
    "canonicalize",
    "chain_transfer",
    "characteristic_matrix",
    "check_resonance",
    "classify",
    "decompose",
    "find_resonances",
    "h_function",
    "incidental_resonance",
    "interaction_from_json",
    "interaction_to_json",
    "interference_series",
    "lengths_from_angles",
    "probabilities",
    "probability_current",
    "quartic_coefficients",
    "resonance_residual",
    "resonance_rhs",
    "s_matrix",
    "scattering_from_transfer",
    "solve_direct",
    "swap_eigenphases",
    "transfer_matrix",
    "transfer_matrix_inverse",
    "transmission_peak",
    "transmission_probability",
    "two_point_amplitudes",
    "unitarity_defect",
]
