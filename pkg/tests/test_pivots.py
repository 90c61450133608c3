import threading

import pytest

from ztop.pivots import (
    BitBudgetExceeded,
    MultiplierChain,
    MultiplierFunc,
    TwoPowerExponent,
    exponent_gaps,
    gaps_strictly_increasing,
    has_min_exponent_gap,
    make_pivots,
    parse_descriptor,
    validate_prefix,
)


def test_make_pivots_examples(square, linear, chain232):
    assert square.terms(5) == [1, 2, 16, 512, 65536]
    assert linear.terms(4) == [1, 2, 4, 8]
    assert chain232.terms(4) == [1, 2, 6, 12]
    # the multiplier list repeats periodically
    assert chain232.terms(7) == [1, 2, 6, 12, 24, 72, 144]


def test_clamped_exponent_forms():
    pow2 = make_pivots("pow2")
    assert pow2.terms(4) == [1, 4, 16, 256]  # exponents 0, 2, 4, 8
    fact = make_pivots("factorial")
    assert fact.terms(5) == [1, 2, 4, 64, 2**24]  # exponents 0, 1, 2, 6, 24


def test_term_examples(square, chain232):
    assert square.term(3) == 512  # independently: 2 ** (3 * 3)
    assert square.term(0) == 1
    assert chain232.term(2) == 6
    with pytest.raises(ValueError):
        square.term(-1)


def test_polynomial_exponents():
    cubic = make_pivots("poly:3,0,1")  # a_n = 3n + n^3
    assert cubic.exponent(0) == 0
    assert [cubic.exponent(n) for n in range(4)] == [0, 4, 14, 36]
    assert cubic.term(2) == 2**14
    with pytest.raises(ValueError):
        make_pivots("poly:-1")  # decreasing exponents
    with pytest.raises(ValueError):
        make_pivots("poly:")


def test_descriptor_parsing():
    assert parse_descriptor("square") == TwoPowerExponent("square")
    assert parse_descriptor("chain:2,3,2") == MultiplierChain((2, 3, 2))
    assert parse_descriptor("poly:1,2") == TwoPowerExponent("poly", (1, 2))
    with pytest.raises(ValueError):
        parse_descriptor("fibonacci")
    with pytest.raises(ValueError):
        make_pivots(MultiplierChain((2, 1)))
    with pytest.raises(ValueError):
        make_pivots(MultiplierChain(()))


def test_descriptor_text_round_trip():
    for text in ["linear", "square", "factorial", "pow2", "poly:3,0,1", "chain:2,3,2"]:
        assert make_pivots(text).text == text


def test_validate_prefix(square):
    assert validate_prefix(square, 10).ok
    report = validate_prefix([1, 3, 5])
    assert report == (False, 1, "not_divisor")
    report = validate_prefix([1, 2, 2])
    assert report == (False, 1, "equal_terms")
    report = validate_prefix([2, 4, 8])
    assert report == (False, 0, "nonunit_base")
    with pytest.raises(ValueError):
        validate_prefix(square)  # length required for sequences


@pytest.mark.parametrize("text", ["linear", "square", "factorial", "pow2", "chain:2,3,2", "poly:2,1"])
def test_chain_axioms_over_prefix(text):
    seq = make_pivots(text)
    terms = seq.terms(9)
    assert terms[0] == 1
    for n in range(8):
        assert terms[n + 1] % terms[n] == 0
        assert terms[n + 1] // terms[n] >= 2
        assert terms[n + 1] > terms[n]


@pytest.mark.parametrize(
    "text,exponent",
    [
        ("linear", lambda n: n),
        ("square", lambda n: n**2),
        ("pow2", lambda n: 0 if n == 0 else 2**n),
    ],
)
def test_two_power_terms_match_exponents(text, exponent):
    seq = make_pivots(text)
    for n in range(10):
        assert seq.term(n) == 2 ** exponent(n)
        assert seq.exponent(n) == exponent(n)


def test_multiplier_func_descriptor():
    seq = make_pivots(MultiplierFunc(lambda step: step + 1, name="step+1"))
    assert seq.terms(4) == [1, 2, 6, 24]
    assert seq.cycle_product() is None
    assert not seq.is_two_power
    bad = make_pivots(MultiplierFunc(lambda step: 1))
    with pytest.raises(ValueError):
        bad.term(1)


def test_bit_budget_guard():
    seq = make_pivots("square", bit_budget=100)
    assert seq.term(9) == 2**81
    with pytest.raises(BitBudgetExceeded):
        seq.term(10)  # needs 101 bits
    # determinism: the failure repeats and earlier terms stay intact
    with pytest.raises(BitBudgetExceeded):
        seq.term(10)
    assert seq.term(9) == 2**81

    chain = make_pivots(MultiplierChain((2,)), bit_budget=8)
    assert chain.term(7) == 128
    with pytest.raises(BitBudgetExceeded):
        chain.term(8)


def test_bit_budget_env_override(monkeypatch):
    monkeypatch.setenv("ZTOP_BIT_BUDGET", "50")
    seq = make_pivots("square")
    assert seq.bit_budget == 50
    with pytest.raises(BitBudgetExceeded):
        seq.term(8)  # 65 bits


def test_terms_until_covers_bound(square):
    terms = square.terms_until(1000)
    assert terms[-1] >= 1000
    assert square.terms_until(1)[0] == 1
    longer = square.terms_until(1000, extra=2)
    assert len(longer) >= len(terms)


def test_concurrent_term_access():
    seq = make_pivots("square")
    results = []

    def worker():
        results.append([seq.term(n) for n in range(40)])

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


def test_gap_predicates(square, linear, factorial):
    assert exponent_gaps(square, 5) == [1, 3, 5, 7]
    # gaps from index 1 on are all >= 2 for the square chain
    assert has_min_exponent_gap(square, 10, 2, start=1)
    assert not has_min_exponent_gap(square, 10, 2, start=0)
    assert not has_min_exponent_gap(linear, 10, 2)
    assert gaps_strictly_increasing(square, 10)
    assert not gaps_strictly_increasing(linear, 10)
    assert exponent_gaps(make_pivots(MultiplierChain((2, 3))), 5) is None
    assert not has_min_exponent_gap(factorial, 4, 2, start=1)  # gap a_2 - a_1 = 1
