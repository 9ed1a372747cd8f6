import random

import pytest

from hilbcoef import GorensteinSplit, generate_ci, gorenstein_split
from hilbcoef._combinat import binom, compositions
from hilbcoef.identities import (
    check_binomial_sum,
    check_even_generating_identity,
    check_fl_expansion,
    check_odd_generating_identity,
    check_power_difference_identity,
    det_cofactor,
    full_shift_tuple,
    run_sweep,
    vandermonde_det,
    vandermonde_vt,
)


def test_vandermonde_small_cases():
    assert vandermonde_vt((7,), 3) == 343
    a1, a2 = 3, 8
    assert vandermonde_vt((a1, a2), 1) == (a2 - a1) * (a1 + a2)
    assert det_cofactor([[1, 1], [a1**2, a2**2]]) == vandermonde_vt((a1, a2), 1)
    assert vandermonde_vt((2, 2, 5), 2) == 0
    assert vandermonde_det((2, 2, 5), 2) == 0


def test_vandermonde_t0_is_classical():
    alphas = (1, 4, 6, 11)
    expected = 1
    for i in range(4):
        for j in range(i):
            expected *= alphas[i] - alphas[j]
    assert vandermonde_vt(alphas, 0) == vandermonde_det(alphas, 0) == expected


def test_det_cofactor_matches_known():
    assert det_cofactor([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0
    assert det_cofactor([[4, 3], [6, 3]]) == -6


def test_power_difference_examples():
    assert check_power_difference_identity(5, 2, 2) == (True, True)
    assert (5 - 2) ** 2 - 2**2 == 5
    assert (5 - 2) ** 2 + 2**2 == 13 == 25 - 6 - 6
    for n in range(1, 9):
        assert check_power_difference_identity(8, 4, n) == (True, True)


def test_odd_generating_examples():
    for c, a in [(5, 2), (9, 1), (3, 7)]:
        assert check_odd_generating_identity(c, (a,), 1)
        assert 2 * c == a + (c - a) + c
    assert check_odd_generating_identity(4, (1, 3), 0)
    assert check_odd_generating_identity(7, (2, 3), 2)


def test_even_generating_examples():
    assert check_even_generating_identity(7, (2, 3, 1), 0)
    assert check_even_generating_identity(5, (2,), 1)
    assert check_even_generating_identity(7, (2, 3), 2)


def test_binomial_sum_examples():
    for r in range(6):
        for k in range(1, 4):
            assert check_binomial_sum(r, 0, k, (0,) * k)
    assert check_binomial_sum(3, 1, 2, (1, 0))
    assert binom(4, 3) == 4
    assert check_binomial_sum(4, 4, 2, (2, 2))
    assert check_binomial_sum(0, 0, 3, (0, 0, 0))


def test_binomial_sum_precondition():
    with pytest.raises(ValueError):
        check_binomial_sum(2, 3, 1, (3,))


def test_full_shift_tuple():
    g = gorenstein_split(generate_ci([2, 2, 2], 3))
    assert full_shift_tuple(g, (2,)) == (2, 4, 6)
    g = gorenstein_split(generate_ci([2, 3, 3, 4], 4))
    assert g.parity == "even"
    assert full_shift_tuple(g, (2, 5), 5) == (2, 5, 10, 12)
    assert full_shift_tuple(g, (2, 5), 7) == (2, 7, 10, 12)


def test_fl_expansion_examples():
    ci222 = gorenstein_split(generate_ci([2, 2, 2], 3))
    ci23 = gorenstein_split(generate_ci([2, 3], 2))
    for l in range(4):
        assert check_fl_expansion(ci222, (0,), l)
        assert check_fl_expansion(ci23, (0,), l)
    assert check_fl_expansion(GorensteinSplit("odd", 0, 5, ()), (), 3)


def test_fl_expansion_on_every_choice_of_ci_half():
    for degrees in [(2, 3, 4), (2, 2, 3, 5), (3, 3, 4, 4, 5)]:
        g = gorenstein_split(generate_ci(degrees, len(degrees)))
        rng = random.Random(7)
        for _ in range(10):
            choice = tuple(rng.randrange(len(col)) for col in g.columns)
            for l in range(4):
                assert check_fl_expansion(g, choice, l)


def test_compositions_count():
    assert sum(1 for _ in compositions(2, 5)) == binom(6, 4)


def test_small_sweep_is_clean_and_deterministic():
    a = run_sweep("small", seed=3)
    b = run_sweep("small", seed=3)
    assert a.ok and a.failures == []
    assert a.checked == b.checked
    assert a.total >= 500


def test_unknown_sweep():
    with pytest.raises(ValueError):
        run_sweep("huge")
