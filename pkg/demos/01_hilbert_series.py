"""
Hilbert coefficients from a Betti table
=======================================

A complete intersection of a quadric and a cubic in four variables.
"""

from hilbcoef import (
    format_betti_table,
    generate_ci,
    hilbert_coefficients,
    hilbert_function_value,
    numerator,
    oracle_coefficients,
    reduced_numerator,
)

# Koszul resolution of (f2, f3) in K[x1..x4]
t = generate_ci([2, 3], 4)
print(format_betti_table(t, "plain"))

# the numerator of the Hilbert series, then divide out (1 - t)^s
print("numerator:", numerator(t))
q = reduced_numerator(t)
print("Q(t):", q)

# e_l is the l-th Taylor coefficient of Q at t = 1
e = hilbert_coefficients(q, 3)
print("e =", e)

# the Hilbert function itself, straight from the alternating binomial sum
print("H(x), x = 0..8:", [hilbert_function_value(t, x) for x in range(9)])

# fitting the Hilbert polynomial on sample points gives the same e_0, e_1
print("fitted:", oracle_coefficients(t, 1))
