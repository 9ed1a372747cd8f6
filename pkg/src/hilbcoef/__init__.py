"""Exact Hilbert coefficients of graded algebras from Betti tables.

Compute ``e_0, e_1, ...`` of ``R/I`` from the graded Betti numbers of its
minimal resolution by three independent routes, specialize to Gorenstein
(self-dual) resolutions, and check the upper and lower bounds that
quasi-pure Gorenstein resolutions impose on every coefficient.
"""

from .betti import (
    BettiError,
    BettiInvariantError,
    BettiParseError,
    BettiTable,
    GorensteinSplit,
    GorensteinSplitError,
    NonMinimalShiftWarning,
    ShiftProfile,
    dual_complete,
    format_betti_table,
    generate_ci,
    gorenstein_split,
    is_gorenstein_symmetric,
    is_quasi_pure,
    load_betti_table,
    parse_betti_table,
    shift_profile,
    socle_shift,
)
from .bounds import BoundsReport, f_l, hz_bounds, main_bounds, verify
from .coeffs import (
    NonIntegralError,
    coefficients_from_shifts,
    gorenstein_coefficients,
    nu_table,
    peskine_szpiro_check,
    srinivasan_power_sums,
)
from .series import (
    IntPolynomial,
    NonDivisibleError,
    divide_out,
    hilbert_coefficients,
    hilbert_function_value,
    numerator,
    oracle_coefficients,
    reduced_numerator,
)

__version__ = "0.1.0"
