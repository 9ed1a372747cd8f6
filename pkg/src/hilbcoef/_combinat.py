"""Small exact combinatorial helpers shared by the other modules."""

from itertools import combinations, combinations_with_replacement
from math import comb, prod


def binom(n, p):
    """Binomial coefficient with ``binom(n, p) = 0`` whenever ``n < p`` or ``p < 0``.

    Negative ``n`` also yields 0; callers only ever need the truncated
    convention, never the generalized (negative upper index) one.
    """
    if p < 0 or n < p or n < 0:
        return 0
    return comb(n, p)


def compositions(total, parts):
    """Yield every tuple of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def elementary_symmetric(values, degree):
    """e_degree(values) by subset enumeration (reference implementation)."""
    return sum(prod(c) for c in combinations(values, degree))


def complete_homogeneous(values, degree):
    """h_degree(values): sum of all monomials of the given degree."""
    if degree < 0:
        return 0
    return sum(prod(c) for c in combinations_with_replacement(values, degree))


def complete_homogeneous_by_compositions(values, degree):
    """h_degree(values) summed over exponent vectors; independent of the multiset route."""
    total = 0
    for beta in compositions(degree, len(values)):
        total += prod(v ** b for v, b in zip(values, beta))
    return total
