"""Decidable membership oracles for the basic neighbourhoods of 0 in the two
topologies a pivot chain induces on the integers:

* uniform neighbourhoods -- k belongs at level m iff k/b_n stays in the
  closed arc [-1/(4m), 1/(4m)] for every n >= 1. The infinite quantifier is
  decided by checking only the indices with b_n < 4m|k|: beyond them
  |k|/b_n <= 1/(4m) holds automatically. This termination bound is the one
  piece of plumbing everything else leans on.
* linear neighbourhoods -- k belongs at index n iff b_n divides k.

Four routes into the uniform question are provided: the direct scan, the
equivalent partial-sum criterion on the balanced digits, and one-sided
digit-ratio tests (sufficient at 1/(8m), necessary at 3/(8m)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence, Union

from ztop._kernels import member_direct_scan, member_partial_scan, wrap_half
from ztop.decomposition import PivotCoefficients
from ztop.pivots import PivotSequence
from ztop.torus import check_level


@dataclass(frozen=True)
class Uniform:
    """Uniform-convergence neighbourhood at arc level m >= 1."""

    m: int

    def __post_init__(self):
        check_level(self.m)


@dataclass(frozen=True)
class Linear:
    """Linear neighbourhood b_n * Z at chain index n >= 0."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("linear neighbourhood index must be >= 0")


Family = Union[Uniform, Linear]


@dataclass(frozen=True)
class NeighborhoodSpec:
    pivots: PivotSequence
    family: Family

    def describe(self) -> dict:
        if isinstance(self.family, Uniform):
            return {"pivots": self.pivots.text, "family": "uniform", "m": self.family.m}
        return {"pivots": self.pivots.text, "family": "linear", "n": self.family.n}


def member_direct(k: int, pivots: PivotSequence, m: int) -> bool:
    """Uniform membership by scanning k/b_n for every index below the
    termination bound; k = 0 is always a member."""
    check_level(m)
    if k == 0:
        return True
    terms = pivots.terms_until(4 * m * (-k if k < 0 else k))
    return member_direct_scan(k, terms, m)


def member_partial_sums(k: int, pivots: PivotSequence, m: int) -> bool:
    """Uniform membership via the balanced digits of k: the partial sums
    sum_{s<n} k_s b_s must stay within b_n/(4m) for every n. Agrees with
    member_direct on every input."""
    check_level(m)
    if k == 0:
        return True
    terms = pivots.terms_until(4 * m * (-k if k < 0 else k), extra=1)
    return member_partial_scan(k, terms, m)


def coeff_bound_test(coeffs: PivotCoefficients, m: int, mode: str) -> bool:
    """One-sided digit tests for uniform membership.

    ``sufficient``: every |k_n| b_n / b_{n+1} <= 1/(8m) (then k is a member);
    ``necessary``: every |k_n| b_n / b_{n+1} <= 3/(8m) (members satisfy this).
    Neither is the other's converse; k = 128 over the square chain at m = 1
    is a member that fails the sufficient test.
    """
    check_level(m)
    if mode not in ("sufficient", "necessary"):
        raise ValueError(f"mode must be 'sufficient' or 'necessary', got {mode!r}")
    factor = 1 if mode == "sufficient" else 3
    digits = coeffs.coeffs
    if not digits:
        return True
    terms = coeffs.pivots.terms(len(digits) + 1)
    for n, k in enumerate(digits):
        ak = -k if k < 0 else k
        if 8 * m * ak * terms[n] > factor * terms[n + 1]:
            return False
    return True


def member_linear(k: int, pivots: PivotSequence, n: int) -> bool:
    """Whether k lies in the linear neighbourhood b_n * Z."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return k % pivots.term(n) == 0


def member(k: int, spec: NeighborhoodSpec) -> bool:
    if isinstance(spec.family, Uniform):
        return member_direct(k, spec.pivots, spec.family.m)
    return member_linear(k, spec.pivots, spec.family.n)


def iter_members(spec: NeighborhoodSpec, window: int) -> Iterator[int]:
    """Members of the neighbourhood with |k| <= window, by increasing |k|,
    positive before negative. Deterministic."""
    if window < 0:
        raise ValueError("window must be >= 0")
    if isinstance(spec.family, Linear):
        b = spec.pivots.term(spec.family.n)
        yield 0
        k = b
        while k <= window:
            yield k
            yield -k
            k += b
        return
    m = spec.family.m
    yield 0
    for k in range(1, window + 1):
        if member_direct(k, spec.pivots, m):
            yield k
            yield -k


# -- constructive discreteness witness --------------------------------------


class DiscretenessWitness(NamedTuple):
    """Certificate that the uniform topology built on a concrete decreasing
    sequence with bounded successive ratios separates 0 at a finite level.

    ``level`` = multiplier * ratio_bound; ``verified`` reports whether the
    brute-force window retained only k = 0. ``survivors`` lists the window
    elements not excluded by the supplied prefix (a superset of the true
    neighbourhood restricted to the window, so survivors == (0,) is a sound
    separation certificate while extra survivors are merely inconclusive).
    """

    ratio_bound: int
    multiplier: int
    level: int
    window_bound: int
    verified: bool
    survivors: tuple[int, ...]


def discreteness_witness(
    xs: Sequence[Fraction],
    ratio_bound: int,
    brute_window: int,
) -> DiscretenessWitness:
    """Build and verify the separation certificate for a sequence prefix.

    ``xs`` must be strictly decreasing rationals in (0, 1/2] with
    x_i / x_{i+1} <= ratio_bound (violations raise ValueError; the caller
    asserts the tail keeps decreasing to 0). The multiplier l is minimal
    with 4 * l * x_1 > 1, and the a-priori containment of the level-m
    neighbourhood in [-1/(4 x_1), 1/(4 x_1)] means brute_window of about
    1/(4 x_1) suffices in principle.
    """
    xs = [Fraction(x) for x in xs]
    if not xs:
        raise ValueError("need a nonempty sequence prefix")
    m = int(ratio_bound)
    if m < 1:
        raise ValueError("ratio bound must be a positive integer")
    if brute_window < 1:
        raise ValueError("brute-force window must be positive")
    half = Fraction(1, 2)
    for i, x in enumerate(xs):
        if not (0 < x <= half):
            raise ValueError(f"x_{i + 1} = {x} outside (0, 1/2]")
        if i + 1 < len(xs):
            if xs[i + 1] >= x:
                raise ValueError(f"sequence not strictly decreasing at index {i + 1}")
            if x > m * xs[i + 1]:
                raise ValueError(
                    f"ratio x_{i + 1}/x_{i + 2} = {x / xs[i + 1]} exceeds bound {m}"
                )
    x1 = xs[0]
    # minimal l with 4*l*x1 > 1
    inv = Fraction(1, 4) / x1
    l = inv.numerator // inv.denominator + 1
    level = l * m
    survivors = []
    for k in range(-brute_window, brute_window + 1):
        for x in xs:
            t = wrap_half(k * x.numerator, x.denominator)
            ta = -t if t < 0 else t
            if 4 * level * ta > x.denominator:
                break
        else:
            survivors.append(k)
    return DiscretenessWitness(
        ratio_bound=m,
        multiplier=l,
        level=level,
        window_bound=brute_window,
        verified=survivors == [0],
        survivors=tuple(survivors),
    )
