"""Exact and p-adic verification of supercongruences for a truncated 6F5 series."""

from .exact import GaussianRational, PlusInfinity, PowerSeries, Rational, valuation_rational
from .hyper import (
    HypergeometricSpec,
    evaluate_truncated,
    phi_series,
    pochhammer,
    psi_series,
    psi_value,
    vanhamme_lhs,
    vanhamme_lhs_mod,
    whipple_terminating,
)
from .padic import PAdicContext, PAdicInt, gamma_p_int, gamma_p_rational, reduce_rational
from .verify import (
    CongruenceReport,
    SuiteRequest,
    run_suite,
    verify_key_steps,
    verify_liu_mod_p4,
    verify_swisher,
    verify_theorem1,
    verify_vanhamme,
)

__version__ = "0.1.0"
