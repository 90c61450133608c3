"""Balanced decomposition of integers over a pivot chain.

Every integer l can be written l = sum k_i * b_i with digits bounded by
|k_n| <= b_{n+1} / (2 b_n) and partial sums bounded by
|sum_{i<=n} k_i b_i| <= b_{n+1} / 2. The digits fall out of repeated
nearest-integer rounding with half-ties broken toward zero, working from
the top index N (minimal with b_N >= |l|) downwards.

All integers are accepted, not just naturals: the digit recursion is odd,
so decompose(-l) yields the negated digits of l. decompose(0) returns the
empty digit list and recomposes to 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from ztop._kernels import coefficient_checks, decompose_digits, nearest_int_div
from ztop.pivots import PivotSequence


def nearest_int(q) -> int:
    """Nearest integer to the rational q; exact half-ties resolve toward zero."""
    q = Fraction(q)
    return nearest_int_div(q.numerator, q.denominator)


class PivotCoefficients(NamedTuple):
    """Digits of one integer over one pivot chain.

    ``coeffs`` is trimmed of trailing zeros (lowest index first);
    ``top_index`` is the minimal N with b_N >= |source| when the digits come
    from ``decompose`` (None for l = 0 and for hand-built digit lists).
    """

    source: int
    coeffs: tuple[int, ...]
    pivots: PivotSequence
    top_index: int | None

    def text(self) -> str:
        return ",".join(str(k) for k in self.coeffs)


class CoefficientCheck(NamedTuple):
    value: int
    sum_ok: bool
    digit_bounds_ok: bool
    partial_sum_bounds_ok: bool

    @property
    def ok(self) -> bool:
        return self.sum_ok and self.digit_bounds_ok and self.partial_sum_bounds_ok


def decompose(l: int, pivots: PivotSequence) -> PivotCoefficients:
    """Balanced digits of l over the chain; deterministic.

    Raises BitBudgetExceeded if reaching b_N >= |l| would blow the chain's
    bit budget.
    """
    if l == 0:
        return PivotCoefficients(0, (), pivots, None)
    al = -l if l < 0 else l
    terms = pivots.terms_until(al)
    digits = decompose_digits(l, terms)
    top = 0
    while terms[top] < al:
        top += 1
    return PivotCoefficients(l, tuple(digits), pivots, top)


def coefficients_from_digits(
    digits: Sequence[int],
    pivots: PivotSequence,
    source: int | None = None,
) -> PivotCoefficients:
    """Wrap a hand-built digit list for checking; ``source`` defaults to the
    recomposed value, so sum_ok is then trivially true."""
    digits = tuple(int(d) for d in digits)
    if source is None:
        source = sum(k * pivots.term(n) for n, k in enumerate(digits))
    return PivotCoefficients(int(source), digits, pivots, None)


def recompose_and_check(coeffs: PivotCoefficients) -> CoefficientCheck:
    """Recompute sum k_i b_i and evaluate each balance invariant independently.

    Violations are reported, never raised, so the checker is usable on
    invalid hand-built digit lists. Trailing zero digits do not change any
    verdict.
    """
    digits = coeffs.coeffs
    if not digits:
        return CoefficientCheck(0, coeffs.source == 0, True, True)
    terms = coeffs.pivots.terms(len(digits) + 1)
    value, digit_ok, partial_ok = coefficient_checks(list(digits), terms)
    return CoefficientCheck(value, value == coeffs.source, digit_ok, partial_ok)
