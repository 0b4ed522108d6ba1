"""Fractional Schroedinger equation in an infinite well with the Riesz derivative."""

from __future__ import annotations

from .errors import (
    AnchorDegenerate,
    BranchPointArgument,
    ClassicalEndpoint,
    DomainError,
    FracwellError,
    NoConvergence,
    OutOfValidatedRange,
    PoleInParameter,
    SeriesOverflow,
    SingularOrigin,
    SpectrumOrderError,
    ToleranceNotMet,
    WindowExhausted,
)
from .mlwell import MlfEigenfunction, mlf_eigenfunction_eval, mlf_energies, mlf_first_zeros
from .riesz import (
    QuadratureControl,
    TrigMode,
    confined_apply_trig,
    free_apply_trig,
    i1_trig,
    i2_trig,
    i3_trig,
    outside_residual,
    quadrature_oracle,
    riesz_prefactor,
    upsilon,
    window_integral_complex,
)
from .specfun import SeriesControl, hyp1f2, log_gamma, mittag_leffler, upper_gamma
from .spectral import (
    ApproxEnergy,
    EigenPair,
    OperatorMatrix,
    ParitySeries,
    approx_energy,
    approx_energy_detail,
    build_operator_matrix,
    classical_energy,
    eval_series,
    free_energy,
    pseudo_normalized_g,
    solve_well,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorDegenerate",
    "ApproxEnergy",
    "BranchPointArgument",
    "ClassicalEndpoint",
    "DomainError",
    "EigenPair",
    "FracwellError",
    "MlfEigenfunction",
    "NoConvergence",
    "OperatorMatrix",
    "OutOfValidatedRange",
    "ParitySeries",
    "PoleInParameter",
    "QuadratureControl",
    "SeriesControl",
    "SeriesOverflow",
    "SingularOrigin",
    "SpectrumOrderError",
    "ToleranceNotMet",
    "TrigMode",
    "WindowExhausted",
    "approx_energy",
    "approx_energy_detail",
    "build_operator_matrix",
    "classical_energy",
    "confined_apply_trig",
    "eval_series",
    "free_apply_trig",
    "free_energy",
    "hyp1f2",
    "i1_trig",
    "i2_trig",
    "i3_trig",
    "log_gamma",
    "mittag_leffler",
    "mlf_eigenfunction_eval",
    "mlf_energies",
    "mlf_first_zeros",
    "outside_residual",
    "pseudo_normalized_g",
    "quadrature_oracle",
    "riesz_prefactor",
    "solve_well",
    "upper_gamma",
    "upsilon",
    "window_integral_complex",
]
