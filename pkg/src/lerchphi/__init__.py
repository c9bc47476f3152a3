"""Closed forms for partial Fourier sums over harmonic progressions, their
full-series limits, Lerch's Phi(e^m, k, b), Li_k(e^m) and zeta(-k, b), with
direct-summation oracles to check them against."""

from .errors import ConvergenceError, DomainError, LerchError
from .harmonic import AsymptoticConstant, HarmonicParams, harmonic_number, harmonic_progression, hp_asymptotic_constant
from .hurwitz import bernoulli_poly, hurwitz_zeta_neg, hurwitz_zeta_neg_bernoulli
from .kernels import BACKEND
from .lerch import ContinuationValue, LerchParams, exp_via_zeta, lerch_e_sum, lerch_phi, polylog
from .partial_sums import (SumParams, TrigKind, lerch_partial_closed, lerch_partial_direct, trig_partial_closed,
                           trig_partial_direct)
from .quadrature import Integrand, QuadOptions, QuadratureResult, integrate
from .regime import BClass, Regime, classify_b
from .series_limits import SeriesSpec, SeriesValue, fourier_series_b, fourier_series_b0

__version__ = "0.1.0"

__all__ = [
    "AsymptoticConstant", "BACKEND", "BClass", "ContinuationValue", "ConvergenceError", "DomainError",
    "HarmonicParams", "Integrand", "LerchError", "LerchParams", "QuadOptions", "QuadratureResult", "Regime",
    "SeriesSpec", "SeriesValue", "SumParams", "TrigKind", "bernoulli_poly", "classify_b", "exp_via_zeta",
    "fourier_series_b", "fourier_series_b0", "harmonic_number", "harmonic_progression", "hp_asymptotic_constant",
    "hurwitz_zeta_neg", "hurwitz_zeta_neg_bernoulli", "integrate", "lerch_e_sum", "lerch_partial_closed",
    "lerch_partial_direct", "lerch_phi", "polylog", "trig_partial_closed", "trig_partial_direct",
]
