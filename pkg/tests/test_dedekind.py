import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from surgery_obstruction.dedekind import (DedekindPair, dedekind_row_direct, dedekind_sum_direct,
                                          dedekind_sum_fast, rearranged_dedekind_sides,
                                          rearranged_dedekind_term, reciprocity_residual, sawtooth,
                                          six_p_s, six_ps_mod3_fact)
from surgery_obstruction.errors import HypothesisViolated, NotCoprime
from surgery_obstruction.numerics import make_rational


def literal_sum(q, p):
    """Textbook definition, term by term through the sawtooth function."""
    return sum((sawtooth(Fraction(k, p)) * sawtooth(Fraction(k * q, p)) for k in range(1, p)),
               Fraction(0))


@st.composite
def coprime_pairs(draw, p_max=300, signed=True):
    p = draw(st.integers(1, p_max))
    lo = -3 * p if signed else 1
    q = draw(st.integers(lo, 3 * p).filter(lambda q: math.gcd(q, p) == 1))
    return q, p


@pytest.mark.parametrize("x, expected", [
    (make_rational(5), make_rational(0)),
    (make_rational(1, 2), make_rational(0)),
    (make_rational(1, 3), make_rational(-1, 6)),
    (make_rational(-1, 3), make_rational(1, 6)),
])
def test_sawtooth(x, expected):
    assert sawtooth(x) == expected


@pytest.mark.parametrize("q, p, expected", [
    (7, 1, make_rational(0)),
    (1, 3, make_rational(1, 18)),
    (1, 9, make_rational(14, 27)),
    (2, 9, make_rational(4, 27)),
])
def test_direct_examples(q, p, expected):
    assert dedekind_sum_direct(q, p) == expected
    assert literal_sum(q, p) == expected


@pytest.mark.parametrize("q, p, expected", [
    (1, 9, make_rational(14, 27)),
    (4, 9, make_rational(-4, 27)),
    (-1, 3, make_rational(-1, 18)),
])
def test_fast_examples(q, p, expected):
    assert dedekind_sum_fast(q, p) == expected


@pytest.mark.parametrize("fn", [dedekind_sum_direct, dedekind_sum_fast])
def test_not_coprime(fn):
    with pytest.raises(NotCoprime):
        fn(2, 4)
    with pytest.raises(NotCoprime):
        DedekindPair(3, 9)


@given(coprime_pairs(p_max=60))
def test_direct_matches_literal_definition(pair):
    q, p = pair
    assert dedekind_sum_direct(q, p) == literal_sum(q, p)


@pytest.mark.parametrize("p", [1, 2, 3, 9, 10, 97, 120])
def test_vectorized_row_matches_direct(p):
    row = dedekind_row_direct(p)
    assert sorted(row) == [q for q in range(1, p) if math.gcd(q, p) == 1]
    for q, v in row.items():
        assert v == dedekind_sum_direct(q, p)


@given(coprime_pairs())
def test_fast_matches_direct(pair):
    assert dedekind_sum_fast(*pair) == dedekind_sum_direct(*pair)


@given(coprime_pairs(signed=False))
def test_oddness_and_periodicity(pair):
    q, p = pair
    s = dedekind_sum_direct(q, p)
    assert dedekind_sum_direct(-q, p) == -s
    assert dedekind_sum_direct(q + p, p) == s
    assert dedekind_sum_fast(-q, p) == -s


@pytest.mark.parametrize("p", range(1, 301))
def test_closed_form_s1(p):
    assert dedekind_sum_direct(1, p) == make_rational((p - 1) * (p - 2), 12 * p)


@pytest.mark.parametrize("p, q", [(2, 3), (1, 1), (9, 2)])
def test_reciprocity_examples(p, q):
    assert reciprocity_residual(p, q) == 0


def test_reciprocity_example_values():
    assert dedekind_sum_direct(2, 3) == make_rational(-1, 18)
    assert dedekind_sum_direct(3, 2) == 0


def test_reciprocity_detects_a_wrong_sum():
    assert reciprocity_residual(9, 2, lambda q, p: make_rational(0)) != 0


def test_rearranged_unit_case():
    lhs, rhs = rearranged_dedekind_sides(0, 1, 1)
    assert lhs == rhs == -1
    assert rearranged_dedekind_term(0, 1, 1) == -1


@pytest.mark.parametrize("m, p, q", [(2, 9, 1), (5, 9, 2), (-7, 45, 13), (0, 90, 7)])
def test_rearranged_sides_agree(m, p, q):
    lhs, rhs = rearranged_dedekind_sides(m, p, q)
    assert lhs == rhs
    assert rearranged_dedekind_sides(m, p, q, dedekind_sum_fast) == (lhs, rhs)


@pytest.mark.parametrize("q, p, expected", [(1, 9, 28), (2, 9, 8), (4, 9, -8)])
def test_six_p_s(q, p, expected):
    assert six_p_s(q, p) == expected


@pytest.mark.parametrize("p, q", [(9, 1), (9, 2), (9, 4)])
def test_mod3_fact_examples(p, q):
    assert six_ps_mod3_fact(p, q)


@pytest.mark.parametrize("p, q", [(27, 1), (12, 1), (18, 3)])
def test_mod3_fact_domain(p, q):
    with pytest.raises(HypothesisViolated):
        six_ps_mod3_fact(p, q)


def test_mod3_fact_not_coprime():
    with pytest.raises(NotCoprime):
        six_ps_mod3_fact(18, 4)
