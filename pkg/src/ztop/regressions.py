"""Named one-shot regressions: the concrete worked examples the library must
reproduce exactly. Run via ``ztop verify-paper`` together with the
acceptance sweeps; each check returns (ok, detail)."""

from __future__ import annotations

import random
from fractions import Fraction

from ztop import acceptance
from ztop.decomposition import decompose, recompose_and_check
from ztop.neighborhoods import coeff_bound_test, member_direct, member_partial_sums
from ztop.pivots import TwoPowerExponent, make_pivots
from ztop.torus import canonicalize, in_arc, int_scale


def _square():
    return make_pivots(TwoPowerExponent("square"))


def check_uniform_membership_128():
    """128 over the square chain at level 1: member by both routes, passes
    the necessary digit test, fails the sufficient one."""
    square = _square()
    coeffs = decompose(128, square)
    ok = (
        coeffs.coeffs == (0, 0, 8)
        and member_direct(128, square, 1)
        and member_partial_sums(128, square, 1)
        and not coeff_bound_test(coeffs, 1, "sufficient")
        and coeff_bound_test(coeffs, 1, "necessary")
        and in_arc(int_scale(128, canonicalize(Fraction(1, 512))), 1)
    )
    return ok, f"digits {coeffs.coeffs}, member with sufficient test failing"


def check_doubling_witnesses():
    return acceptance.two_adic_separation()


def check_half_ratio_separation():
    return acceptance.linear_separation()


def check_geometric_difference_membership():
    return acceptance.convergent_membership()


def check_block_example_falsification():
    return acceptance.block_closed_forms()


def check_halving_discreteness():
    return acceptance.discreteness()


def check_spot_equivalence(seed: int = 0, samples: int = 200):
    """Seeded random spot checks: the direct and partial-sum membership
    routes agree, and digit round-trips hold, outside the exhaustive sweep
    ranges."""
    rng = random.Random(seed)
    square = _square()
    linear = make_pivots(TwoPowerExponent("linear"))
    for _ in range(samples):
        k = rng.randint(-(10**7), 10**7)
        m = rng.choice((1, 2, 3, 4, 5, 8, 16))
        pivots = rng.choice((square, linear))
        if member_direct(k, pivots, m) != member_partial_sums(k, pivots, m):
            return False, f"route disagreement at k={k}, m={m}, chain {pivots.text}"
        check = recompose_and_check(decompose(k, pivots))
        if not check.ok:
            return False, f"digit round-trip failed at k={k}, chain {pivots.text}"
    return True, f"{samples} seeded spot checks (seed {seed})"


PAPER_CHECKS = [
    ("uniform-membership-128", check_uniform_membership_128),
    ("doubling-sequence-witnesses", check_doubling_witnesses),
    ("half-ratio-separation", check_half_ratio_separation),
    ("geometric-difference-membership", check_geometric_difference_membership),
    ("block-example-falsification", check_block_example_falsification),
    ("halving-discreteness", check_halving_discreteness),
]


def run_paper_checks(seed: int = 0):
    """All named regressions plus the seeded spot checks; yields
    (name, ok, detail) triples in a fixed order."""
    for name, fn in PAPER_CHECKS:
        ok, detail = fn()
        yield name, ok, detail
    ok, detail = check_spot_equivalence(seed=seed)
    yield "seeded-spot-checks", ok, detail
