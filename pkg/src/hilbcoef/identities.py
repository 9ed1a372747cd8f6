"""Brute-force checks of the polynomial identities behind the coefficient bounds.

Each ``check_*`` evaluates both sides of one identity independently (usually
by enumerating compositions) and returns whether they agree.  :func:`run_sweep`
runs all of them over fixed parameter grids plus seeded random instances.
"""

import random
from collections import Counter
from dataclasses import dataclass, field
from math import prod

from ._combinat import binom, complete_homogeneous, compositions
from .betti import GorensteinSplit
from .bounds import f_l
from .coeffs import nu_table


# --------------------------------------------------------------------------
# Vandermonde-type determinants


def vandermonde_vt(alphas, t):
    """Generalized Vandermonde determinant via its product formula.

    Rows are ``alpha^0 .. alpha^(k-2)`` and a last row ``alpha^(k-1+t)``; the
    determinant is ``prod_{j<i} (alpha_i - alpha_j) * h_t(alpha)``.
    """
    alphas = tuple(alphas)
    k = len(alphas)
    if k < 1 or t < 0:
        raise ValueError("need at least one alpha and t >= 0")
    diff = prod(alphas[i] - alphas[j] for i in range(k) for j in range(i))
    return diff * complete_homogeneous(alphas, t)


def vandermonde_matrix(alphas, t):
    k = len(alphas)
    exps = list(range(k - 1)) + [k - 1 + t]
    return [[a**e for a in alphas] for e in exps]


def det_cofactor(matrix):
    """Determinant by Laplace expansion along the first row (small matrices only)."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = 0
    for col in range(size):
        if matrix[0][col] == 0:
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        total += (-1) ** col * matrix[0][col] * det_cofactor(minor)
    return total


def vandermonde_det(alphas, t):
    return det_cofactor(vandermonde_matrix(tuple(alphas), t))


# --------------------------------------------------------------------------
# binomial identities


def check_power_difference_identity(c, a, n):
    """Both expansions of ``(c-a)^n -/+ a^n`` in powers of ``a(c-a)`` and ``c``.

    Returns ``(difference_ok, sum_ok)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    alpha = a * (c - a)
    diff = sum(
        (-1) ** t * binom(n - t - 1, t) * alpha**t * (c - 2 * a) * c ** (n - 2 * t - 1)
        for t in range(n // 2 + 1)
        if binom(n - t - 1, t)
    )
    total = sum(
        (-1) ** t * binom(n - t, t) * alpha**t * c ** (n - 2 * t)
        for t in range(n // 2 + 1)
    ) + sum(
        (-1) ** t * binom(n - t - 1, t - 1) * alpha**t * c ** (n - 2 * t)
        for t in range(1, n // 2 + 1)
    )
    return (c - a) ** n - a**n == diff, (c - a) ** n + a**n == total


def _alpha_side(c, a, r, bracket):
    alphas = [x * (c - x) for x in a]
    return sum(
        (-1) ** t * bracket(len(a), r, t) * c ** (r - 2 * t) * complete_homogeneous(alphas, t)
        for t in range(r // 2 + 1)
    )


def _odd_composition_side(c, a, r):
    k = len(a)
    total = 0
    for beta in compositions(r, 2 * k + 1):
        term = c ** beta[2 * k]
        for i in range(k):
            term *= a[i] ** beta[i] * (c - a[i]) ** beta[k + i]
        total += term
    return total


def _even_composition_side(c, a, r):
    # beta_1..beta_{k-1}: a_i; beta_k: middle; beta_{k+1}..beta_{2k-1}: c - a_i; beta_{2k}: c
    k = len(a)
    total = 0
    for beta in compositions(r, 2 * k):
        term = c ** beta[2 * k - 1] * (a[k - 1] ** beta[k - 1] + (c - a[k - 1]) ** beta[k - 1])
        for i in range(k - 1):
            term *= a[i] ** beta[i] * (c - a[i]) ** beta[k + i]
        total += term
    return total


def _odd_bracket(k, r, t):
    return binom(k + r - t, k + t)


def _even_bracket(k, r, t):
    return binom(k + r - t, k + t) + binom(k + r - t - 1, k + t - 1)


def check_odd_generating_identity(c, a, r):
    """Alternating ``alpha``-expansion equals ``h_r(a_1..a_k, c-a_1..c-a_k, c)``."""
    a = tuple(a)
    if not a or r < 0:
        raise ValueError("need k >= 1 and r >= 0")
    return _alpha_side(c, a, r, _odd_bracket) == _odd_composition_side(c, a, r)


def check_even_generating_identity(c, a, r):
    """Even-length analogue: the middle variable enters as ``a_k^b + (c-a_k)^b``."""
    a = tuple(a)
    if not a or r < 0:
        raise ValueError("need k >= 1 and r >= 0")
    return _alpha_side(c, a, r, _even_bracket) == _even_composition_side(c, a, r)


def check_binomial_sum(r, t, k, betas):
    """``sum_{gamma_1+..+gamma_{k+1} = r-t} prod_{i<=k} C(gamma_i, beta_i) = C(r-t+k, t+k)``."""
    betas = tuple(betas)
    if not 0 <= t <= r or len(betas) != k or sum(betas) != t:
        raise ValueError("need 0 <= t <= r and k betas summing to t")
    lhs = sum(
        prod(binom(g, b) for g, b in zip(gamma, betas))
        for gamma in compositions(r - t, k + 1)
    )
    return lhs == binom(r - t + k, t + k)


def full_shift_tuple(split, a, middle=None):
    """Homological-order shifts ``d_1..d_s`` built from one shift per column.

    For even length ``middle`` picks what sits at position ``k``: ``a_k`` or
    ``c - a_k``.
    """
    c, k = split.c, split.k
    if split.parity == "odd":
        return tuple(a) + tuple(c - x for x in reversed(a)) + (c,)
    lower = tuple(a[: k - 1])
    return lower + (middle,) + tuple(c - x for x in reversed(lower)) + (c,)


def check_fl_expansion(split, choice, l):
    """``sum_r (-1)^(l-r) nu_{l-r} (composition sum of degree r)`` equals ``f_l`` of the shifts.

    ``choice[i]`` indexes the shift taken from column ``i``.  For even length
    the right side is ``f_l(.., a_k, ..) + f_l(.., c - a_k, ..)``.
    """
    if len(choice) != split.k:
        raise ValueError("need one choice per column")
    a = tuple(col[j] for col, j in zip(split.columns, choice))
    c, s = split.c, split.s
    nu = nu_table(s, l)
    if split.parity == "odd":
        comp = lambda r: _odd_composition_side(c, a, r)  # noqa: E731
        rhs = f_l(l, full_shift_tuple(split, a))
    else:
        comp = lambda r: _even_composition_side(c, a, r)  # noqa: E731
        rhs = f_l(l, full_shift_tuple(split, a, a[-1])) + f_l(
            l, full_shift_tuple(split, a, c - a[-1])
        )
    lhs = sum((-1) ** (l - r) * nu[l - r] * comp(r) for r in range(l + 1))
    return lhs == rhs


# --------------------------------------------------------------------------
# sweeps


@dataclass
class SweepResult:
    checked: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    def record(self, name, ok, params):
        self.checked[name] += 1
        if not ok:
            self.failures.append((name, params))

    @property
    def total(self):
        return sum(self.checked.values())

    @property
    def ok(self):
        return not self.failures


_SWEEPS = {
    "small": dict(c_max=20, n_max=12, k_max=3, r_max=6, per_cell=10,
                  binom_r=8, binom_k=4, fl_count=120, vdm_count=120),
    "full": dict(c_max=30, n_max=16, k_max=3, r_max=7, per_cell=30,
                 binom_r=10, binom_k=5, fl_count=400, vdm_count=400),
}


def random_split(rng, k_max=3, value_max=12):
    """A random half resolution with sorted columns and ``c >= 2a`` throughout."""
    parity = rng.choice(["odd", "even"])
    k = rng.randint(0 if parity == "odd" else 1, k_max)
    c = rng.randint(2, 2 * value_max)
    columns = tuple(
        tuple(sorted(rng.randint(1, c // 2) for _ in range(rng.randint(1, 3))))
        for _ in range(k)
    )
    return GorensteinSplit(parity, k, c, columns)


def run_sweep(kind="small", seed=0):
    """Run every identity check; deterministic for a given ``seed``."""
    try:
        cfg = _SWEEPS[kind]
    except KeyError:
        raise ValueError(f"unknown sweep {kind!r}") from None
    rng = random.Random(seed)
    res = SweepResult()

    for c in range(2, cfg["c_max"] + 1):
        for a in range(1, c):
            for n in range(1, cfg["n_max"] + 1):
                d_ok, s_ok = check_power_difference_identity(c, a, n)
                res.record("power_difference", d_ok, (c, a, n))
                res.record("power_sum", s_ok, (c, a, n))

    for k in range(1, cfg["k_max"] + 1):
        for r in range(cfg["r_max"] + 1):
            for _ in range(cfg["per_cell"]):
                c = rng.randint(1, 10)
                a = tuple(rng.randint(1, 10) for _ in range(k))
                res.record("odd_generating", check_odd_generating_identity(c, a, r), (c, a, r))
                res.record("even_generating", check_even_generating_identity(c, a, r), (c, a, r))

    for r in range(cfg["binom_r"] + 1):
        for k in range(1, cfg["binom_k"] + 1):
            for t in range(r + 1):
                for betas in compositions(t, k):
                    res.record("binomial_sum", check_binomial_sum(r, t, k, betas), (r, t, k, betas))

    for _ in range(cfg["fl_count"]):
        split = random_split(rng)
        choice = tuple(rng.randrange(len(col)) for col in split.columns)
        l = rng.randint(0, 4)
        res.record("fl_expansion", check_fl_expansion(split, choice, l), (split, choice, l))

    for _ in range(cfg["vdm_count"]):
        k = rng.randint(1, 4)
        alphas = tuple(sorted(rng.randint(0, 20) for _ in range(k)))
        t = rng.randint(0, 5)
        value = vandermonde_vt(alphas, t)
        res.record("vandermonde_formula", value == vandermonde_det(alphas, t), (alphas, t))
        res.record("vandermonde_sign", value >= 0, (alphas, t))

    return res

