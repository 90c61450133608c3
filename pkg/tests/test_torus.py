from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ztop.torus import TorusPoint, add, canonicalize, in_arc, int_scale, parse_rational, rat_str

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=10**4)


def F(s):
    return Fraction(s)


def test_canonicalize_examples():
    assert canonicalize(F("5/4")).rep == F("1/4")
    # half-open range: 1/2 is represented as -1/2
    assert canonicalize(F("1/2")).rep == F("-1/2")
    assert canonicalize(F("-31/16")).rep == F("1/16")  # -31/16 + 2 = 1/16
    assert canonicalize(3).rep == 0
    assert canonicalize("7/3").rep == F("1/3")


def test_canonical_range_is_half_open():
    assert canonicalize(F("-1/2")).rep == F("-1/2")
    assert canonicalize(F("3/2")).rep == F("-1/2")
    with pytest.raises(ValueError):
        TorusPoint(F("1/2"))
    with pytest.raises(ValueError):
        TorusPoint(F("-3/4"))


def test_add_examples():
    quarter = canonicalize(F("1/4"))
    assert add(quarter, quarter).rep == F("-1/2")
    assert add(canonicalize(F("1/3")), canonicalize(F("-1/3"))).rep == 0
    assert add(canonicalize(F("2/5")), canonicalize(F("1/5"))).rep == F("-2/5")


def test_int_scale_examples():
    assert int_scale(128, canonicalize(F("1/512"))).rep == F("1/4")
    assert int_scale(0, canonicalize(F("3/7"))).rep == 0
    assert int_scale(2, canonicalize(F("-1/2"))).rep == 0


def test_in_arc_examples():
    assert in_arc(canonicalize(F("1/4")), 1)  # closed endpoint
    assert not in_arc(canonicalize(F("1/4")), 2)
    assert not in_arc(canonicalize(F("8/31")), 1)  # 8/31 > 1/4
    assert in_arc(canonicalize(F("-1/8")), 2)  # closed endpoint, negative side
    with pytest.raises(ValueError):
        in_arc(canonicalize(0), 0)


@given(rationals)
def test_canonicalize_idempotent(q):
    once = canonicalize(q)
    assert canonicalize(once.rep) == once


@given(rationals, rationals)
def test_add_commutative(a, b):
    assert add(canonicalize(a), canonicalize(b)) == add(canonicalize(b), canonicalize(a))


@given(rationals, rationals, rationals)
def test_add_associative(a, b, c):
    x, y, z = canonicalize(a), canonicalize(b), canonicalize(c)
    assert add(add(x, y), z) == add(x, add(y, z))


@given(st.integers(min_value=-50, max_value=50), rationals)
def test_int_scale_matches_iterated_add(k, q):
    x = canonicalize(q)
    step = x if k >= 0 else int_scale(-1, x)
    acc = canonicalize(0)
    for _ in range(abs(k)):
        acc = add(acc, step)
    assert int_scale(k, x) == acc


@given(rationals, st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=4))
def test_arc_nesting(q, m, bump):
    x = canonicalize(q)
    if in_arc(x, m + bump):
        assert in_arc(x, m)


@given(rationals, st.integers(min_value=1, max_value=12))
def test_arc_symmetry(q, m):
    x = canonicalize(q)
    assert in_arc(x, m) == in_arc(int_scale(-1, x), m)


def test_rational_text_forms():
    assert rat_str(F("-2/5")) == "-2/5"
    assert rat_str(F(0)) == "0/1"
    assert parse_rational(" 3/9 ") == F("1/3")
    with pytest.raises(ValueError):
        parse_rational("0.5")
