"""
Bounds on e_l for quasi-pure symmetric resolutions
==================================================

Lower and upper bounds built from mixed minimal and maximal shifts, next to
the coarser bounds that use only the minima or only the maxima.
"""

from hilbcoef import generate_ci, shift_profile, verify

# a table with spread-out shifts: the bounds bracket e_l
report = verify(generate_ci([2, 3, 3], 6))
print("quasi-pure:", report.quasi_pure, "symmetric:", report.gorenstein, "c:", report.c)
for row in report.rows:
    print(f"l={row.l}: {row.hz_lower} <= {row.lower} <= {row.e} <= {row.upper} <= {row.hz_upper}")

# pure resolutions: both bounds are equalities
report = verify(generate_ci([2, 2, 2], 6))
print("pure:", [f"{row.lower} = {row.e} = {row.upper}" for row in report.rows])

# a tie m_2 == M_1 together with a linear generator: the upper bound for e_3
# drops below the true value, because the mixed shift tuple (3, 3, 6) is not
# strictly increasing
t = generate_ci([1, 2, 3], 6)
print(shift_profile(t))
for row in verify(t).rows:
    print(f"l={row.l}: lower={row.lower} e={row.e} upper={row.upper} pass={row.passed}")
