"""Effective rate of MISO links over alpha-mu fading.

Closed-form contour-integral evaluations, both-end asymptotics, and seeded
Monte Carlo verification of the delay-QoS constrained rate of a transmit
array with independent alpha-mu branches.
"""

from .alphamu import AlphaMuParams, cdf, moment, pdf, sample, special_case
from .montecarlo import McConfig, simulate_ergodic_capacity, simulate_rate
from .rates import (
    MisoLink,
    RationalizationError,
    channel_power_moments,
    ergodic_capacity_quadrature,
    gamma_expectation,
    high_snr_validity,
    parametric_eb_n0,
    rate_exact_foxh,
    rate_exact_meijerg,
    rate_exact_quadrature,
    rate_high_snr,
    rate_low_snr,
    rate_nakagami,
    wideband_metrics,
)
from .special import (
    ContourError,
    FoxHSpec,
    MeijerGSpec,
    TruncationError,
    fox_h,
    log_gamma_complex,
    meijer_g,
    tricomi_u,
)
from .sumfit import FitConvergenceError, SumFit, fit_sum, sum_moments

__version__ = "0.1.0"

__all__ = [
    "AlphaMuParams",
    "ContourError",
    "FitConvergenceError",
    "FoxHSpec",
    "McConfig",
    "MeijerGSpec",
    "MisoLink",
    "RationalizationError",
    "SumFit",
    "TruncationError",
    "cdf",
    "channel_power_moments",
    "ergodic_capacity_quadrature",
    "fit_sum",
    "fox_h",
    "gamma_expectation",
    "high_snr_validity",
    "log_gamma_complex",
    "meijer_g",
    "moment",
    "parametric_eb_n0",
    "pdf",
    "rate_exact_foxh",
    "rate_exact_meijerg",
    "rate_exact_quadrature",
    "rate_high_snr",
    "rate_low_snr",
    "rate_nakagami",
    "sample",
    "simulate_ergodic_capacity",
    "simulate_rate",
    "special_case",
    "sum_moments",
    "tricomi_u",
    "wideband_metrics",
]
