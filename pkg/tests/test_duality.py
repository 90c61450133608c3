from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ztop.duality import (
    CERT_BUDGET,
    CERT_DIVISOR,
    CERT_PRIME_SUPPORT,
    char_eval,
    character,
    continuity_window_check,
    generated_member,
    kernel_check,
)
from ztop.neighborhoods import Linear, NeighborhoodSpec, Uniform
from ztop.pivots import BitBudgetExceeded, MultiplierFunc, make_pivots
from ztop.torus import add, canonicalize

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=500)


def test_char_eval_examples(square):
    assert char_eval(character("1/2"), 2).rep == 0
    assert char_eval(character("3/16"), 5).rep == Fraction(-1, 16)  # 15/16 wraps
    for k in (1, 3, -7):
        chi = character(Fraction(k, square.term(3)))
        assert char_eval(chi, square.term(3)).rep == 0  # kernel identity


@given(rationals, st.integers(-200, 200), st.integers(-200, 200))
def test_char_eval_homomorphism(value, x, y):
    chi = character(value)
    assert char_eval(chi, x + y) == add(char_eval(chi, x), char_eval(chi, y))


def test_kernel_check_examples(square):
    report = kernel_check(character("3/16"), square)
    assert report.continuous_for_linear and report.witness_index == 2
    assert report.certificate == CERT_DIVISOR

    report = kernel_check(character("1/3"), square)
    assert not report.continuous_for_linear
    assert report.certificate == CERT_PRIME_SUPPORT  # 3 divides no power of 2

    report = kernel_check(character("0/1"), square)
    assert report.continuous_for_linear and report.witness_index == 0


def test_kernel_check_periodic_chain(chain23):
    report = kernel_check(character(Fraction(1, 12)), chain23)
    assert report.continuous_for_linear
    assert chain23.term(report.witness_index) % 12 == 0
    report = kernel_check(character(Fraction(1, 35)), chain23)
    assert not report.continuous_for_linear
    assert report.certificate == CERT_PRIME_SUPPORT


def test_kernel_check_budget_inconclusive():
    # support unknown (callable chain), denominator never divides: only the
    # budget can stop the scan
    awkward = make_pivots(MultiplierFunc(lambda step: 2, name="doubling"), bit_budget=64)
    report = kernel_check(character(Fraction(1, 3)), awkward)
    assert not report.continuous_for_linear
    assert report.certificate == CERT_BUDGET


def test_generated_member_examples(square):
    assert generated_member(canonicalize(Fraction(1, 8)), square)  # 1/8 = 64/512
    assert not generated_member(canonicalize(Fraction(1, 3)), square)
    assert generated_member(canonicalize(0), square)
    awkward = make_pivots(MultiplierFunc(lambda step: 2, name="doubling"), bit_budget=64)
    with pytest.raises(BitBudgetExceeded):
        generated_member(canonicalize(Fraction(1, 3)), awkward)


def test_generated_member_agrees_with_kernel_check(square, chain23):
    for pivots in (square, chain23):
        for q in range(1, 200):
            chi = character(Fraction(1, q))
            assert generated_member(chi.value, pivots) == kernel_check(chi, pivots).continuous_for_linear


def test_continuity_window_examples(square, linear):
    check = continuity_window_check(character("1/2"), NeighborhoodSpec(square, Uniform(1)), 10**4)
    assert check.ok  # members at level 1 are all even here

    check = continuity_window_check(character("1/3"), NeighborhoodSpec(linear, Linear(5)), 10**3)
    assert not check.ok
    assert check.failing_k == 32  # 32/3 wraps to -1/3, outside the quarter arc

    check = continuity_window_check(character("0/1"), NeighborhoodSpec(square, Uniform(4)), 100)
    assert check.ok


def test_kernel_implies_window_for_linear(square):
    for q in (2, 16, 512):
        chi = character(Fraction(1, q))
        report = kernel_check(chi, square)
        assert report.continuous_for_linear
        spec = NeighborhoodSpec(square, Linear(report.witness_index))
        assert continuity_window_check(chi, spec, 10**4).ok


def test_dual_containment_shadow(square):
    """Characters continuous for the linear topology stay inside the quarter
    arc on uniform members at level b_n: the finite shadow of the dual
    containment."""
    for p, q in [(1, 2), (3, 16), (1, 16), (5, 512), (-3, 512)]:
        chi = character(Fraction(p, q))
        report = kernel_check(chi, square)
        assert report.continuous_for_linear
        m = square.term(report.witness_index)
        spec = NeighborhoodSpec(square, Uniform(m))
        assert continuity_window_check(chi, spec, 10**4).ok
