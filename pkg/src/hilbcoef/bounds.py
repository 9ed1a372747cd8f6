"""Upper and lower bounds for Hilbert coefficients from extremal shifts.

For a Gorenstein quotient with a quasi-pure resolution of length
``s = 2k`` or ``2k + 1``, every ``e_l`` with ``0 <= l <= n - s`` satisfies::

    f_l(lo) * prod(lo) / (s+l)!  <=  e_l  <=  f_l(hi) * prod(hi) / (s+l)!

with ``lo = (m_1..m_k, M_{k+1}..M_s)`` and ``hi = (M_1..M_k, m_{k+1}..m_s)``.
Taking ``lo = m`` and ``hi = M`` throughout gives the weaker bounds known
for all Cohen-Macaulay quotients; :func:`verify` reports both.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .betti import (
    GorensteinSplitError,
    gorenstein_split,
    is_quasi_pure,
    shift_profile,
    socle_shift,
)
from .coeffs import coefficients_from_shifts, gorenstein_coefficients
from .series import hilbert_coefficients, reduced_numerator


def f_l(l, y):
    """Sum over ``1 <= i_1 <= ... <= i_l <= s`` of ``prod_t (y_{i_t} - (i_t + t - 1))``.

    ``f_0 = 1``.  Evaluated by recursion on (first allowed index, position).
    """
    y = tuple(y)
    s = len(y)
    if l < 0:
        raise ValueError("l must be nonnegative")

    @lru_cache(maxsize=None)
    def tail(start, t):
        # sum over i_t..i_l with start <= i_t, 1-based indices
        if t > l:
            return 1
        return sum((y[i - 1] - (i + t - 1)) * tail(i, t + 1) for i in range(start, s + 1))

    return tail(1, 1)


def _bound(l, args):
    return Fraction(f_l(l, args) * prod(args), factorial(len(args) + l))


def main_bounds(profile, l, s=None):
    """``(lower, upper)`` mixing minimal and maximal shifts across the two halves."""
    s = profile.s if s is None else s
    if s != profile.s:
        raise ValueError(f"profile has length {profile.s}, expected {s}")
    k = s // 2
    lo = profile.m[:k] + profile.M[k:]
    hi = profile.M[:k] + profile.m[k:]
    return _bound(l, lo), _bound(l, hi)


def hz_bounds(profile, l, s=None):
    """``(lower, upper)`` using all minimal or all maximal shifts."""
    s = profile.s if s is None else s
    if s != profile.s:
        raise ValueError(f"profile has length {profile.s}, expected {s}")
    return _bound(l, profile.m), _bound(l, profile.M)


@dataclass(frozen=True)
class BoundsRow:
    l: int
    lower: Fraction
    e: int
    upper: Fraction
    hz_lower: Fraction
    hz_upper: Fraction

    @property
    def passed(self):
        return self.lower <= self.e <= self.upper

    @property
    def dominates(self):
        """The mixed bounds sit inside the all-min / all-max bounds."""
        return self.hz_lower <= self.lower and self.upper <= self.hz_upper


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class BoundsReport:
    n: int
    s: int
    quasi_pure: bool
    gorenstein: bool
    c: object  # socle shift or None
    rows: tuple
    routes_agree: bool
    socle_bound_ok: bool = True  # c >= 2a on every half shift
    notes: tuple = field(default=())

    @property
    def bounds_apply(self):
        return self.quasi_pure and self.gorenstein

    @property
    def ok(self):
        """False only when the bounds are guaranteed and something fails."""
        if not self.routes_agree:
            return False
        if not self.bounds_apply:
            return True
        if not self.socle_bound_ok:
            return False
        return all(row.passed and row.dominates for row in self.rows)

    def to_dict(self):
        return {
            "n": self.n,
            "s": self.s,
            "quasi_pure": self.quasi_pure,
            "gorenstein": self.gorenstein,
            "c": self.c,
            "routes_agree": self.routes_agree,
            "socle_bound_ok": self.socle_bound_ok,
            "bounds_apply": self.bounds_apply,
            "ok": self.ok,
            "rows": [
                {
                    "l": row.l,
                    "lower": format_rational(row.lower),
                    "e": str(row.e),
                    "upper": format_rational(row.upper),
                    "pass": row.passed,
                    "hz_lower": format_rational(row.hz_lower),
                    "hz_upper": format_rational(row.hz_upper),
                }
                for row in self.rows
            ],
            "notes": list(self.notes),
        }


def verify(table, L=None):
    """Evaluate both bound pairs against ``e_l`` for ``l = 0..min(L, n - s)``.

    ``e_l`` comes from the reduced numerator; the shift-based routes are
    recomputed alongside and ``routes_agree`` records whether they match.
    The default ``L`` is ``min(6, n - s)``.
    """
    s, n = table.s, table.n
    cap = n - s
    notes = []
    if L is None:
        L = min(6, cap)
    elif L > cap:
        notes.append(f"max l truncated from {L} to n - s = {cap}")
        L = cap
    q = reduced_numerator(table)
    e = hilbert_coefficients(q, L)
    profile = shift_profile(table)
    qp = is_quasi_pure(profile)
    c = socle_shift(table)

    agree = coefficients_from_shifts(table, L) == e
    socle_ok = True
    if c is not None:
        try:
            split = gorenstein_split(table)
        except GorensteinSplitError as exc:
            notes.append(f"symmetric diagram has no Gorenstein half: {exc}")
            c = None
        else:
            agree = agree and gorenstein_coefficients(split, L) == e
            socle_ok = all(2 * a <= split.c for col in split.columns for a in col)
    if not (qp and c is not None):
        notes.append("not quasi-pure Gorenstein: bounds are informational")

    rows = []
    for l in range(L + 1):
        lower, upper = main_bounds(profile, l, s)
        hz_lower, hz_upper = hz_bounds(profile, l, s)
        rows.append(BoundsRow(l, lower, e[l], upper, hz_lower, hz_upper))
    return BoundsReport(n, s, qp, c is not None, c, tuple(rows), agree, socle_ok, tuple(notes))
