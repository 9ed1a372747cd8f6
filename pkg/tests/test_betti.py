import json
import warnings

import pytest
from hypothesis import given, strategies as st

from hilbcoef import (
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
    parse_betti_table,
    shift_profile,
    socle_shift,
)

from conftest import ci_corpus

CI23_JSON = json.dumps(
    {
        "n": 2,
        "entries": [
            {"i": 0, "j": 0, "beta": 1},
            {"i": 1, "j": 2, "beta": 1},
            {"i": 1, "j": 3, "beta": 1},
            {"i": 2, "j": 5, "beta": 1},
        ],
    }
)


def test_parse_hypersurface():
    text = '{"n": 1, "entries": [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1}]}'
    t = parse_betti_table(text)
    assert t.s == 1
    assert t.shifts(1) == [2]


def test_parse_ci23(ci23):
    t = parse_betti_table(CI23_JSON)
    assert t == ci23
    assert t.s == 2
    assert [t.total_betti(i) for i in range(3)] == [1, 2, 1]


def test_parse_plain_with_comments(ci222):
    text = """
    # complete intersection of three quadrics
    n 3
    0 0 1
    1 2 3   # three quadrics
    2 4 3
    3 6 1
    """
    assert parse_betti_table(text, "plain") == ci222


@pytest.mark.parametrize(
    "text, exc",
    [
        ('{"n": 2, "entries": [{"i": 1, "j": 2, "beta": 1}]}', BettiInvariantError),
        ('{"n": 1, "entries": [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1},'
         ' {"i": 2, "j": 4, "beta": 1}]}', BettiInvariantError),
        ('{"n": 2, "entries": [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 0}]}',
         BettiInvariantError),
        ('{"entries": [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1}]}',
         BettiParseError),
        ('{"n": 2, "entries": [{"i": 0, "j": 0}]}', BettiParseError),
        ("{not json", BettiParseError),
    ],
)
def test_parse_rejects(text, exc):
    with pytest.raises(exc):
        parse_betti_table(text)


def test_plain_requires_header():
    with pytest.raises(BettiParseError):
        parse_betti_table("0 0 1\n1 2 1\n", "plain")


def test_nonminimal_shift_warns_but_parses():
    text = "n 3\n0 0 1\n1 2 1\n2 1 1\n"
    with pytest.warns(NonMinimalShiftWarning):
        t = parse_betti_table(text, "plain")
    assert t.nonminimal_entries == ((2, 1, 1),)


def test_minimal_table_does_not_warn(ci23):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_betti_table(CI23_JSON)


@pytest.mark.parametrize("fmt", ["json", "plain"])
def test_format_round_trip(ci222, pfaffians7, fmt):
    for t in (ci222, pfaffians7):
        assert parse_betti_table(format_betti_table(t, fmt), fmt) == t


def test_shift_profile(ci23, ci222):
    assert shift_profile(ci23) == ShiftProfile((2, 5), (3, 5))
    assert shift_profile(ci222) == ShiftProfile((2, 4, 6), (2, 4, 6))
    assert shift_profile(generate_ci([7], 1)) == ShiftProfile((7,), (7,))


def test_is_quasi_pure():
    assert is_quasi_pure(ShiftProfile((2, 5), (3, 5)))
    assert is_quasi_pure(ShiftProfile((2, 4, 6), (2, 4, 6)))
    assert not is_quasi_pure(ShiftProfile((2, 3), (5, 6)))
    # ties count as quasi-pure
    assert is_quasi_pure(ShiftProfile((1, 2, 4), (2, 3, 4)))


@st.composite
def profiles(draw):
    s = draw(st.integers(1, 6))
    m = draw(st.lists(st.integers(0, 30), min_size=s, max_size=s))
    widths = draw(st.lists(st.integers(0, 5), min_size=s, max_size=s))
    return ShiftProfile(tuple(m), tuple(a + w for a, w in zip(m, widths)))


@given(profiles(), st.data())
def test_quasi_purity_monotone_under_refinement(p, data):
    # shrinking every interval [m_i, M_i] cannot break quasi-purity
    new_m, new_M = [], []
    for lo, hi in zip(p.m, p.M):
        a = data.draw(st.integers(lo, hi))
        b = data.draw(st.integers(a, hi))
        new_m.append(a)
        new_M.append(b)
    q = ShiftProfile(tuple(new_m), tuple(new_M))
    if is_quasi_pure(p):
        assert is_quasi_pure(q)


def test_gorenstein_symmetry(ci23, ci222, pfaffians5):
    assert socle_shift(ci23) == 5
    assert socle_shift(ci222) == 6
    assert socle_shift(pfaffians5) == 5
    two_top = BettiTable.from_triples(3, [(0, 0, 1), (1, 2, 2), (2, 3, 2)])
    assert not is_gorenstein_symmetric(two_top)
    lopsided = BettiTable.from_triples(3, [(0, 0, 1), (1, 2, 2), (2, 3, 1), (2, 4, 1), (3, 6, 1)])
    assert not is_gorenstein_symmetric(lopsided)


def test_split_examples(ci23, ci222):
    assert gorenstein_split(ci23) == GorensteinSplit("even", 1, 5, ((2,),))
    g = gorenstein_split(ci222)
    assert g == GorensteinSplit("odd", 1, 6, ((2, 2, 2),))
    assert g.r == (3,)
    assert gorenstein_split(generate_ci([4], 1)) == GorensteinSplit("odd", 0, 4, ())


def test_split_rejects_odd_middle_column():
    # symmetric under j -> 6 - j with three middle shifts {2, 3, 4}
    t = BettiTable.from_triples(2, [(0, 0, 1), (1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 6, 1)])
    assert is_gorenstein_symmetric(t)
    with pytest.raises(GorensteinSplitError):
        gorenstein_split(t)


def test_split_rejects_asymmetric_middle():
    t = BettiTable.from_triples(2, [(0, 0, 1), (1, 2, 2), (1, 4, 1), (2, 6, 1)])
    with pytest.raises(GorensteinSplitError):
        gorenstein_split(t)


def test_even_split_keeps_lower_half():
    t = generate_ci([2, 2, 3, 5], 4)
    g = gorenstein_split(t)
    assert g.parity == "even" and g.k == 2
    assert all(2 * a <= g.c for a in g.columns[-1])
    assert 2 * g.r[-1] == t.total_betti(2)


def test_dual_complete_examples(ci23, ci222):
    assert dual_complete(GorensteinSplit("even", 1, 5, ((2,),)), 2) == ci23
    assert dual_complete(GorensteinSplit("odd", 0, 4, ()), 1) == generate_ci([4], 1)
    assert dual_complete(GorensteinSplit("odd", 1, 6, ((2, 2, 2),)), 3) == ci222


def test_split_round_trip_on_corpus():
    for degrees, n, t in ci_corpus(max_s=4, max_degree=5, extra_n=0):
        g = gorenstein_split(t)
        assert dual_complete(g, n) == t, degrees
        assert gorenstein_split(dual_complete(g, n)) == g


def test_generate_ci():
    assert generate_ci([2, 3], 2).entries == ((0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1))
    assert generate_ci([2, 2, 2], 3).entries == ((0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1))
    assert generate_ci([5], 1).entries == ((0, 0, 1), (1, 5, 1))
    with pytest.raises(BettiInvariantError):
        generate_ci([2, 2], 1)


@given(st.lists(st.integers(1, 7), min_size=1, max_size=5), st.integers(0, 2))
def test_ci_is_symmetric_with_sum_socle(degrees, extra):
    t = generate_ci(degrees, len(degrees) + extra)
    assert socle_shift(t) == sum(degrees)


@given(st.integers(1, 7), st.integers(1, 5))
def test_equal_degree_ci_is_pure(d, s):
    p = shift_profile(generate_ci([d] * s, s))
    assert p.is_pure
    assert is_quasi_pure(p)
