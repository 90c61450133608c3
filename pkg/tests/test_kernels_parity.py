"""The compiled and pure kernels must be behaviourally identical."""

import random
import subprocess
import sys

import pytest

from ztop import _kernels_py as pure
from ztop.pivots import make_pivots

try:
    from ztop import _kernels_cy as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

CHAINS = [make_pivots(t) for t in ("linear", "square", "factorial", "chain:2,3")]


def _rand_ints(rng, count, lo=-(10**12), hi=10**12):
    return [rng.randint(lo, hi) for _ in range(count)]


@needs_compiled
def test_rounding_and_wrapping_parity():
    rng = random.Random(7)
    for _ in range(3000):
        p = rng.randint(-(10**9), 10**9)
        q = rng.randint(1, 10**6)
        assert pure.nearest_int_div(p, q) == compiled.nearest_int_div(p, q)
        assert pure.wrap_half(p, q) == compiled.wrap_half(p, q)
    for q in (2, 4, 10):  # exact tie cases
        for f in (-3, -1, 0, 1, 3):
            p = f * q + q // 2
            assert pure.nearest_int_div(p, q) == compiled.nearest_int_div(p, q)


@needs_compiled
def test_digit_kernels_parity():
    rng = random.Random(13)
    for pivots in CHAINS:
        for l in _rand_ints(rng, 300, -(10**7), 10**7) + [0, 1, -1, 128, 2**40]:
            terms = pivots.terms_until(abs(l), extra=1)
            d_pure = pure.decompose_digits(l, terms)
            d_comp = compiled.decompose_digits(l, terms)
            assert d_pure == d_comp
            assert pure.coefficient_checks(d_pure, terms) == compiled.coefficient_checks(
                d_comp, terms
            )


@needs_compiled
def test_membership_kernels_parity():
    rng = random.Random(17)
    for pivots in CHAINS:
        for k in _rand_ints(rng, 200, -(10**6), 10**6) + [0, 128, 496]:
            for m in (1, 2, 8):
                terms = pivots.terms_until(4 * m * abs(k), extra=1)
                assert pure.member_direct_scan(k, terms, m) == compiled.member_direct_scan(
                    k, terms, m
                )
                assert pure.member_partial_scan(k, terms, m) == compiled.member_partial_scan(
                    k, terms, m
                )


def test_pure_backend_env_override():
    code = "import ztop; print(ztop.KERNEL_BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "ZTOP_PURE_KERNELS": "1"},
    )
    assert out.stdout.strip() == "python"
