"""Hilbert coefficients computed directly from the shifts of a resolution.

Three routes live here:

* power sums of all shifts (valid for any Cohen-Macaulay table),
* power sums over the first half of a Gorenstein resolution, weighted by
  ``a (c - a) (c - 2a)`` (odd length) or ``a (c - a)`` (even length),
* the Peskine-Szpiro vanishing checks that make both of them work.

Every division by ``(s + l)!`` is checked to be exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ._combinat import binom


class NonIntegralError(ArithmeticError):
    """A coefficient formula produced a non-integer; the input is inconsistent."""


def nu_table(s, l):
    """``(nu_0, ..., nu_l)``: elementary symmetric values of ``1, 2, ..., s+l-1``.

    Read off from ``prod_{x=1}^{s+l-1} (1 + x z)`` truncated at ``z^l``.
    """
    if s < 1 or l < 0:
        raise ValueError("need s >= 1 and l >= 0")
    nu = [1] + [0] * l
    for x in range(1, s + l):
        for m in range(l, 0, -1):
            nu[m] += x * nu[m - 1]
    return tuple(nu)


def _exact(numer, denom, what):
    q = Fraction(numer, denom)
    if q.denominator != 1:
        raise NonIntegralError(f"{what}: {numer}/{denom} is not an integer")
    return int(q)


def alternating_power_sum(table, m):
    """``sum_{i>=0} (-1)^i sum_j d_ij^m`` over every shift, the ``(0, 0)`` entry included."""
    return sum((-1) ** i * b * j**m for i, j, b in table.entries)


@dataclass(frozen=True)
class PowerSumReport:
    power_sums: tuple  # p_0 .. p_s, over degrees i >= 1
    unit_ok: bool  # p_0 == -1
    vanishing_ok: bool  # p_k == 0 for 1 <= k < s
    multiplicity: Fraction  # (-1)^s p_s / s!

    @property
    def ok(self):
        return self.unit_ok and self.vanishing_ok and self.multiplicity.denominator == 1


def peskine_szpiro_check(table):
    s = table.s
    p = tuple(
        sum((-1) ** i * b * j**k for i, j, b in table.entries if i >= 1)
        for k in range(s + 1)
    )
    return PowerSumReport(
        power_sums=p,
        unit_ok=p[0] == -1,
        vanishing_ok=all(v == 0 for v in p[1:s]),
        multiplicity=Fraction((-1) ** s * p[s], factorial(s)),
    )


def coefficients_from_shifts(table, L):
    """``e_0..e_L`` from power sums of the shifts.

    ``(-1)^s (s+l)! e_l = sum_{r=0}^{l} (-1)^{l-r} nu_{l-r} P_{s+r}`` where
    ``P_m`` is :func:`alternating_power_sum`.
    """
    report = peskine_szpiro_check(table)
    if not (report.unit_ok and report.vanishing_ok):
        raise ValueError("shifts fail the Peskine-Szpiro equations; table is not CM")
    s = table.s
    P = [alternating_power_sum(table, s + r) for r in range(L + 1)]
    out = []
    for l in range(L + 1):
        nu = nu_table(s, l)
        total = sum((-1) ** (l - r) * nu[l - r] * P[r] for r in range(l + 1))
        out.append(_exact((-1) ** s * total, factorial(s + l), f"e_{l}"))
    return tuple(out)


# --------------------------------------------------------------------------
# Gorenstein half-resolution route


def _half_weight(split, a, t):
    c = split.c
    w = a**t * (c - a) ** t
    return w * (c - 2 * a) if split.parity == "odd" else w


def half_power_sum(split, t):
    """``T_t = sum_{i<=k} (-1)^i sum_j a_ij^t (c - a_ij)^t [(c - 2 a_ij)]``.

    The factor ``(c - 2a)`` is present only for odd length; for even length
    the middle column runs over its ``r_k`` representatives only.
    """
    return sum(
        (-1) ** i * _half_weight(split, a, t)
        for i, col in enumerate(split.columns, 1)
        for a in col
    )


@dataclass(frozen=True)
class HalfPowerSumReport:
    values: tuple  # T_0 .. T_tmax
    expected_t0: int  # -c (odd) or -1 (even)
    t0_ok: bool
    vanishing_ok: bool  # T_t == 0 for 1 <= t < k
    multiplicity: Fraction  # e read off from T_k

    @property
    def ok(self):
        return self.t0_ok and self.vanishing_ok and self.multiplicity.denominator == 1


def srinivasan_power_sums(split, tmax=None):
    """Power sums over a Gorenstein half and the multiplicity they encode.

    Odd ``s = 2k+1``: ``T_0 = -c``, ``T_t = 0`` for ``0 < t < k`` and
    ``T_k = (-1)^k (2k+1)! e``.  Even ``s = 2k``: ``T_0 = -1`` and
    ``T_k = (-1)^k (2k)!/2 e``.  A hypersurface (``k = 0``) has an empty
    half; there all sums vanish and ``e = c``.
    """
    k = split.k
    if tmax is None:
        tmax = k
    if tmax < k:
        raise ValueError("tmax must be at least k")
    values = tuple(half_power_sum(split, t) for t in range(tmax + 1))
    if k == 0:
        return HalfPowerSumReport(values, 0, values[0] == 0, True, Fraction(split.c))
    if split.parity == "odd":
        expected = -split.c
        e = Fraction((-1) ** k * values[k], factorial(2 * k + 1))
    else:
        expected = -1
        e = Fraction((-1) ** k * 2 * values[k], factorial(2 * k))
    return HalfPowerSumReport(
        values=values,
        expected_t0=expected,
        t0_ok=values[0] == expected,
        vanishing_ok=all(v == 0 for v in values[1:k]),
        multiplicity=e,
    )


def _odd_bracket(k, r, t):
    return binom(k + r - t, k + t)


def _even_bracket(k, r, t):
    return binom(k + r - t, k + t) + binom(k + r - t - 1, k + t - 1)


def gorenstein_coefficients(split, L):
    """``e_0..e_L`` from the first half of a Gorenstein resolution.

    ``(-1)^k (s+l)! e_l`` equals::

        sum_{r<=l} (-1)^(l-r) nu_{l-r} sum_{t<=r/2} (-1)^t B(k, r, t) c^(r-2t) T_{k+t}

    with ``B = C(k+r-t, k+t)`` for odd length and
    ``B = C(k+r-t, k+t) + C(k+r-t-1, k+t-1)`` for even length.  When
    ``k = 0`` the half is empty and the sum collapses to
    ``(1+l)! e_l = sum_r (-1)^(l-r) nu_{l-r} c^(r+1)``.
    """
    s, k, c = split.s, split.k, split.c
    bracket = _odd_bracket if split.parity == "odd" else _even_bracket
    T = [half_power_sum(split, k + t) for t in range(L // 2 + 1)]
    out = []
    for l in range(L + 1):
        nu = nu_table(s, l)
        total = 0
        for r in range(l + 1):
            if k == 0:
                inner = c ** (r + 1)
            else:
                inner = sum(
                    (-1) ** t * bracket(k, r, t) * c ** (r - 2 * t) * T[t]
                    for t in range(r // 2 + 1)
                )
            total += (-1) ** (l - r) * nu[l - r] * inner
        out.append(_exact((-1) ** k * total, factorial(s + l), f"e_{l}"))
    return tuple(out)
