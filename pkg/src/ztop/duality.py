"""Rational characters of the integers and their continuity against the
chain topologies.

A character is determined by its value at 1, kept as a canonical circle
point p/q. Such a character kills the subgroup b_n * Z exactly when q
divides b_n, so continuity for the linear topology reduces to a
divisibility search along the chain; the same search decides membership in
the subgroup generated by the chain's unit fractions {1/b_n}. For the
uniform topology only a finite-window necessary check is available (the
character must map window members of the neighbourhood into the quarter
arc); passing it is evidence, not proof, of continuity.

Characters are restricted to rational (torsion) values: every continuous
character of the studied topologies is torsion, and irrational values admit
no exact representation.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

from ztop._kernels import wrap_half
from ztop.neighborhoods import NeighborhoodSpec, iter_members
from ztop.pivots import BitBudgetExceeded, PivotSequence
from ztop.torus import TorusPoint, canonicalize, int_scale

DEFAULT_SCAN_TERMS = 512

CERT_DIVISOR = "divisor"
CERT_PRIME_SUPPORT = "prime-support"
CERT_BUDGET = "budget-exhausted"


class Character(NamedTuple):
    """Character k -> k * value of the integers, value a canonical circle point."""

    value: TorusPoint

    @property
    def denominator(self) -> int:
        return self.value.rep.denominator


def character(value) -> Character:
    """Build a character from a rational, "p/q" text, or TorusPoint."""
    if isinstance(value, TorusPoint):
        return Character(value)
    return Character(canonicalize(value))


def char_eval(chi: Character, x: int) -> TorusPoint:
    """chi(x); a group homomorphism in x."""
    return int_scale(x, chi.value)


class KernelCheck(NamedTuple):
    """Outcome of the divisibility search for the character's denominator.

    ``certificate`` records how the verdict was reached: a concrete divisor
    index, a prime outside the chain's support (certain negative), or an
    exhausted budget (inconclusive negative).
    """

    continuous_for_linear: bool
    witness_index: Optional[int]
    certificate: str


def _support_covers(q: int, cycle_product: int) -> bool:
    """Whether every prime of q divides the chain's multiplier cycle."""
    r = q
    while r > 1:
        g = math.gcd(r, cycle_product)
        if g == 1:
            return False
        while g > 1:
            r //= g
            g = math.gcd(r, cycle_product)
    return True


def _denominator_divides(q: int, pivots: PivotSequence, max_terms: int):
    """Least n with q | b_n, else a (False, None, certificate) verdict."""
    if q == 1:
        return True, 0, CERT_DIVISOR
    cp = pivots.cycle_product()
    if cp is not None and not _support_covers(q, cp):
        return False, None, CERT_PRIME_SUPPORT
    n = 0
    while n <= max_terms:
        try:
            b = pivots.term(n)
        except BitBudgetExceeded:
            return False, None, CERT_BUDGET
        if b % q == 0:
            return True, n, CERT_DIVISOR
        n += 1
    return False, None, CERT_BUDGET


def kernel_check(
    chi: Character, pivots: PivotSequence, max_terms: int = DEFAULT_SCAN_TERMS
) -> KernelCheck:
    """Decide whether chi is continuous for the linear chain topology.

    That holds exactly when the reduced denominator of chi(1) divides some
    chain term; the least such index is returned (its subgroup lies in the
    kernel of chi). Negatives certified through the prime support are
    definitive; budget-exhausted negatives are inconclusive.
    """
    found, n, cert = _denominator_divides(chi.denominator, pivots, max_terms)
    return KernelCheck(found, n, cert)


def generated_member(
    x: TorusPoint, pivots: PivotSequence, max_terms: int = DEFAULT_SCAN_TERMS
) -> bool:
    """Whether x lies in the subgroup of the circle generated by the chain's
    unit fractions {1/b_n}; for divisibility chains this means the reduced
    denominator of x divides some b_n.

    Raises BitBudgetExceeded when the search is inconclusive (no divisor
    found, no prime-support certificate available).
    """
    found, _, cert = _denominator_divides(x.rep.denominator, pivots, max_terms)
    if not found and cert == CERT_BUDGET:
        raise BitBudgetExceeded(
            f"no chain term divisible by {x.rep.denominator} within budget"
        )
    return found


class WindowCheck(NamedTuple):
    ok: bool
    failing_k: Optional[int]


def continuity_window_check(
    chi: Character, spec: NeighborhoodSpec, window: int
) -> WindowCheck:
    """Necessary finite check for continuity: chi must map every member k of
    the neighbourhood with |k| <= window into the closed quarter arc.

    Returns the first failing k (by increasing |k|, positive first) as a
    certificate; a passing window is evidence only, since the full
    neighbourhood is infinite.
    """
    p = chi.value.rep.numerator
    q = chi.value.rep.denominator
    for k in iter_members(spec, window):
        t = wrap_half(k * p, q)
        if t < 0:
            t = -t
        if 4 * t > q:
            return WindowCheck(False, k)
    return WindowCheck(True, None)
