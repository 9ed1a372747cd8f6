"""
Coefficients from shifts alone
==============================

Three independent routes to e_l: the reduced series, the alternating power
sums of all shifts, and the power sums of half of a symmetric resolution.
"""

from hilbcoef import (
    BettiTable,
    coefficients_from_shifts,
    gorenstein_coefficients,
    gorenstein_split,
    hilbert_coefficients,
    peskine_szpiro_check,
    reduced_numerator,
    srinivasan_power_sums,
)

# 4x4 Pfaffians of a generic 5x5 skew matrix of linear forms
t = BettiTable.from_triples(5, [(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)])

# the power sums of the shifts vanish below degree s and pin down e_0
ps = peskine_szpiro_check(t)
print("p_k:", ps.power_sums, "ok:", ps.ok, "e_0:", ps.multiplicity)

# keep the first half of the resolution plus the socle shift c
split = gorenstein_split(t)
print("half:", split)
half = srinivasan_power_sums(split)
print("T_t:", half.values, "e_0:", half.multiplicity)

L = 2
print("series:   ", hilbert_coefficients(reduced_numerator(t), L))
print("shifts:   ", coefficients_from_shifts(t, L))
print("half only:", gorenstein_coefficients(split, L))
