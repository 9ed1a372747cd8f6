"""Hilbert series numerators, exact division by powers of (1 - t), and e_l.

The K-polynomial of ``R/I`` is ``sum_i (-1)^i sum_j beta_ij t^j``.  For a
Cohen-Macaulay quotient of codimension ``s`` it factors as ``Q(t) (1-t)^s``
and the Hilbert coefficients are the Taylor coefficients of ``Q`` at 1::

    e_l = Q^(l)(1) / l! = sum_j C(j, l) q_j

:func:`oracle_coefficients` recovers the same numbers without touching
``Q``: it samples the Hilbert function far out and solves for the
coordinates of the Hilbert polynomial in the alternating binomial basis.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._combinat import binom


class NonDivisibleError(ArithmeticError):
    """The numerator is not divisible by the requested power of (1 - t)."""


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in ``t`` with integer coefficients, lowest degree first."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_terms(cls, terms):
        """Build from ``{exponent: coefficient}`` or ``(exponent, coefficient)`` pairs."""
        items = terms.items() if hasattr(terms, "items") else terms
        items = list(items)
        if not items:
            return cls(())
        out = [0] * (max(e for e, _ in items) + 1)
        for e, c in items:
            out[e] += c
        return cls(tuple(out))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[j] + other[j] for j in range(size)))

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, e):
        result = IntPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def divide_one_minus_t(self):
        """Exact quotient by ``1 - t``; raises :class:`NonDivisibleError` otherwise.

        Writing ``p = (1 - t) q`` gives ``q_j = p_0 + ... + p_j``, and the
        remainder is ``p(1)``.
        """
        if self(1) != 0:
            raise NonDivisibleError(f"{self} is not divisible by (1 - t)")
        out, acc = [], 0
        for c in self.coeffs[:-1]:
            acc += c
            out.append(acc)
        return IntPolynomial(tuple(out))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                term = str(abs(c))
            else:
                mono = "t" if j == 1 else f"t^{j}"
                term = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


ONE_MINUS_T = IntPolynomial((1, -1))


def numerator(table):
    """The K-polynomial ``sum_i (-1)^i sum_j beta_ij t^j`` of ``R/I``."""
    return IntPolynomial.from_terms(
        [(j, (-1) ** i * b) for i, j, b in table.entries]
    )


def divide_out(num, s):
    """Return ``Q`` with ``num = Q (1-t)^s``, dividing one factor at a time."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    q = num
    for step in range(s):
        try:
            q = q.divide_one_minus_t()
        except NonDivisibleError:
            raise NonDivisibleError(
                f"numerator {num} is divisible by (1-t)^{step} but not (1-t)^{step + 1}"
            ) from None
    return q


def reduced_numerator(table):
    """``Q(t)`` for a table, dividing by ``(1-t)^s`` with ``s`` read from the table."""
    return divide_out(numerator(table), table.s)


def hilbert_coefficients(q, L):
    """``(e_0, ..., e_L)`` with ``e_l = sum_j C(j, l) q_j``."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    return tuple(
        sum(binom(j, l) * c for j, c in enumerate(q.coeffs)) for l in range(L + 1)
    )


def hilbert_function_value(table, x):
    """dim_K (R/I)_x from the resolution: alternating sum of shifted free modules."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    n = table.n
    return sum(
        (-1) ** i * b * binom(n - 1 + x - j, n - 1) for i, j, b in table.entries
    )


def _solve_exact(matrix, rhs):
    """Gauss-Jordan elimination over the rationals for a square nonsingular system."""
    size = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[-1] for row in aug]


def oracle_coefficients(table, L):
    """Hilbert coefficients fitted from sampled Hilbert function values.

    Samples ``H`` at ``d = n - s`` consecutive points past the largest shift
    (where every binomial term is live, so ``H`` equals the Hilbert
    polynomial) and solves ``H(x) = sum_i (-1)^i e_i C(x+d-1-i, d-1-i)``.
    """
    d = table.n - table.s
    if d < 1:
        raise ValueError("oracle fitting needs n - s >= 1; compare H(x) = q_x instead")
    if not 0 <= L <= d - 1:
        raise ValueError(f"L = {L} out of range 0..{d - 1}")
    x0 = table.max_shift + 1
    xs = range(x0, x0 + d)
    matrix = [[(-1) ** i * binom(x + d - 1 - i, d - 1 - i) for i in range(d)] for x in xs]
    rhs = [hilbert_function_value(table, x) for x in xs]
    sol = _solve_exact(matrix, rhs)
    if any(v.denominator != 1 for v in sol):
        raise ArithmeticError(f"non-integral oracle solution {sol}")
    return tuple(int(v) for v in sol[: L + 1])


def artinian_mismatches(table, q=None):
    """For ``n = s``: the points where ``H(x) != q_x``, checked through ``deg Q + 1``."""
    if table.n != table.s:
        raise ValueError("artinian comparison needs n == s")
    if q is None:
        q = reduced_numerator(table)
    return [
        x for x in range(q.degree + 2) if hilbert_function_value(table, x) != q[x]
    ]
