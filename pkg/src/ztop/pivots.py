"""Pivot sequences: divisibility chains b_0 = 1 | b_1 | b_2 | ... with
strictly increasing terms (so each ratio b_{n+1}/b_n is at least 2).

Two descriptor kinds are supported:

* ``TwoPowerExponent`` -- b_n = 2^(a_n) for a closed-form exponent sequence
  a_n (linear, square, factorial, pow2, or a polynomial in n with no
  constant term). Exponents must start at a_0 = 0 and increase strictly;
  the factorial and pow2 forms are clamped to a_0 = 0 so that b_0 = 1.
* ``MultiplierChain`` -- b_n is the running product of a periodic list of
  integer multipliers >= 2. ``MultiplierFunc`` admits an arbitrary callable
  step -> multiplier for programmatic chains.

Terms are memoized lazily; a configurable bit budget (default 10**6 bits per
term, overridable via the ZTOP_BIT_BUDGET environment variable) guards
against runaway growth of chains like 2^(n^2). Term evaluation is
deterministic and safe under concurrent access.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence, Union

DEFAULT_BIT_BUDGET = 1_000_000
BIT_BUDGET_ENV = "ZTOP_BIT_BUDGET"

EXPONENT_FORMS = ("linear", "square", "factorial", "pow2", "poly")


class BitBudgetExceeded(RuntimeError):
    """A pivot term (or sequence value) would exceed the configured bit size."""


@dataclass(frozen=True)
class TwoPowerExponent:
    """Descriptor for chains b_n = 2^(a_n) with a closed-form exponent a_n."""

    form: str
    coeffs: tuple[int, ...] = ()

    def exponent(self, n: int) -> int:
        if self.form == "linear":
            return n
        if self.form == "square":
            return n * n
        if self.form == "factorial":
            return 0 if n == 0 else math.factorial(n)
        if self.form == "pow2":
            return 0 if n == 0 else 1 << n
        if self.form == "poly":
            # coefficients of n^1..n^d; no constant term, so a_0 = 0
            return sum(c * n ** (i + 1) for i, c in enumerate(self.coeffs))
        raise ValueError(f"unknown exponent form {self.form!r}")

    @property
    def text(self) -> str:
        if self.form == "poly":
            return "poly:" + ",".join(str(c) for c in self.coeffs)
        return self.form


@dataclass(frozen=True)
class MultiplierChain:
    """Descriptor for chains built from a periodically repeated multiplier list."""

    multipliers: tuple[int, ...]

    def multiplier(self, step: int) -> int:
        return self.multipliers[(step - 1) % len(self.multipliers)]

    @property
    def text(self) -> str:
        return "chain:" + ",".join(str(m) for m in self.multipliers)


@dataclass(frozen=True)
class MultiplierFunc:
    """Descriptor wrapping a callable step -> multiplier (step >= 1).

    The callable must be deterministic; chains built this way cannot be
    expressed in the CLI descriptor text format.
    """

    fn: Callable[[int], int]
    name: str = "func"

    def multiplier(self, step: int) -> int:
        return self.fn(step)

    @property
    def text(self) -> str:
        return f"func:{self.name}"


PivotDescriptor = Union[TwoPowerExponent, MultiplierChain, MultiplierFunc]


def parse_descriptor(text: str) -> PivotDescriptor:
    """Parse the CLI descriptor format.

    Accepted forms: ``linear``, ``square``, ``factorial``, ``pow2``,
    ``poly:c1,c2,...`` (coefficients of n^1..n^d), ``chain:m1,m2,...``
    (periodic multipliers).
    """
    text = text.strip()
    if text in ("linear", "square", "factorial", "pow2"):
        return TwoPowerExponent(text)
    if text.startswith("poly:"):
        coeffs = tuple(int(c) for c in text[5:].split(","))
        return TwoPowerExponent("poly", coeffs)
    if text.startswith("chain:"):
        mults = tuple(int(m) for m in text[6:].split(","))
        return MultiplierChain(mults)
    raise ValueError(f"unknown pivot descriptor {text!r}")


def _resolve_budget(bit_budget):
    if bit_budget is not None:
        return int(bit_budget)
    env = os.environ.get(BIT_BUDGET_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_BIT_BUDGET


class PivotSequence:
    """Lazily evaluated, memoized divisibility chain b_0, b_1, b_2, ...

    The chain itself defines the linear neighbourhoods b_n * Z and the unit
    fractions 1/b_n (n >= 1) on which uniform convergence is measured.
    """

    def __init__(self, descriptor: PivotDescriptor, bit_budget: int | None = None):
        self.descriptor = descriptor
        self.bit_budget = _resolve_budget(bit_budget)
        self._memo: list[int] = [1]
        self._exps: list[int] | None = [0] if isinstance(descriptor, TwoPowerExponent) else None
        self._lock = threading.Lock()

    # -- term access -------------------------------------------------------

    def term(self, n: int) -> int:
        """Exact b_n; deterministic across calls and threads."""
        if n < 0:
            raise ValueError("term index must be nonnegative")
        memo = self._memo
        if n < len(memo):
            return memo[n]
        with self._lock:
            while len(self._memo) <= n:
                self._append_next()
        return self._memo[n]

    def terms(self, count: int) -> list[int]:
        """The prefix [b_0, ..., b_{count-1}] as a fresh list."""
        if count < 1:
            raise ValueError("count must be positive")
        self.term(count - 1)
        return self._memo[:count]

    def terms_until(self, bound: int, extra: int = 0) -> list[int]:
        """Memoized prefix whose last needed term is >= bound, plus ``extra``.

        Returns the live memo list for speed; callers must treat it as
        read-only. The list is guaranteed to contain a term >= max(bound, 1).
        """
        if bound < 1:
            bound = 1
        n = 0
        while self.term(n) < bound:
            n += 1
        for i in range(extra):
            self.term(n + 1 + i)
        return self._memo

    def exponent(self, n: int) -> int | None:
        """a_n for two-power chains (b_n = 2^(a_n)); None otherwise."""
        if self._exps is None:
            return None
        self.term(n)
        return self._exps[n]

    @property
    def is_two_power(self) -> bool:
        return self._exps is not None

    def cycle_product(self) -> int | None:
        """Product of one multiplier period, or None when the prime support
        of the chain is not known in closed form (MultiplierFunc)."""
        d = self.descriptor
        if isinstance(d, TwoPowerExponent):
            return 2
        if isinstance(d, MultiplierChain):
            return math.prod(d.multipliers)
        return None

    @property
    def text(self) -> str:
        return self.descriptor.text

    # -- growth ------------------------------------------------------------

    def _append_next(self):
        d = self.descriptor
        i = len(self._memo)
        if isinstance(d, TwoPowerExponent):
            a = d.exponent(i)
            if a <= self._exps[-1]:
                raise ValueError(
                    f"exponent form {d.text!r} is not strictly increasing at n={i}"
                )
            if a + 1 > self.bit_budget:
                raise BitBudgetExceeded(
                    f"term b_{i} of {d.text!r} needs {a + 1} bits (budget {self.bit_budget})"
                )
            self._exps.append(a)
            self._memo.append(1 << a)
        else:
            mult = d.multiplier(i)
            if not isinstance(mult, int) or mult < 2:
                raise ValueError(f"multiplier at step {i} must be an integer >= 2, got {mult!r}")
            nxt = self._memo[-1] * mult
            if nxt.bit_length() > self.bit_budget:
                raise BitBudgetExceeded(
                    f"term b_{i} of {d.text!r} needs {nxt.bit_length()} bits "
                    f"(budget {self.bit_budget})"
                )
            self._memo.append(nxt)


def make_pivots(descriptor: PivotDescriptor | str, bit_budget: int | None = None) -> PivotSequence:
    """Build and sanity-check a pivot sequence from a descriptor or its text form.

    Rejects exponent forms that do not start at 0 or fail to increase over a
    probe prefix; the monotonicity of polynomial forms is additionally
    enforced lazily at every term evaluation.
    """
    if isinstance(descriptor, str):
        descriptor = parse_descriptor(descriptor)
    if isinstance(descriptor, TwoPowerExponent):
        if descriptor.form not in EXPONENT_FORMS:
            raise ValueError(f"unknown exponent form {descriptor.form!r}")
        if descriptor.form == "poly" and not descriptor.coeffs:
            raise ValueError("polynomial exponent form needs at least one coefficient")
        probe = [descriptor.exponent(n) for n in range(9)]
        if probe[0] != 0:
            raise ValueError(f"exponent form must satisfy a_0 = 0, got a_0 = {probe[0]}")
        for n in range(8):
            if probe[n + 1] <= probe[n]:
                raise ValueError(
                    f"exponent form {descriptor.text!r} is not strictly increasing at n={n + 1}"
                )
    elif isinstance(descriptor, MultiplierChain):
        if not descriptor.multipliers:
            raise ValueError("multiplier chain needs at least one multiplier")
        for m in descriptor.multipliers:
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"multipliers must be integers >= 2, got {m!r}")
    elif not isinstance(descriptor, MultiplierFunc):
        raise TypeError(f"not a pivot descriptor: {descriptor!r}")
    return PivotSequence(descriptor, bit_budget=bit_budget)


# -- prefix validation -----------------------------------------------------

VIOLATION_NONUNIT_BASE = "nonunit_base"
VIOLATION_NOT_DIVISOR = "not_divisor"
VIOLATION_EQUAL_TERMS = "equal_terms"


class PrefixValidation(NamedTuple):
    ok: bool
    index: int | None
    reason: str | None


def validate_prefix(seq: PivotSequence | Sequence[int], length: int | None = None) -> PrefixValidation:
    """Check the chain axioms (b_0 = 1, consecutive terms distinct, each term
    divides the next) over a prefix.

    ``seq`` may be a PivotSequence (then ``length`` terms are materialized)
    or an explicit list of terms. Violations are data, not errors: the
    report carries the first offending index and a reason code.
    """
    if isinstance(seq, PivotSequence):
        if length is None or length < 1:
            raise ValueError("length must be a positive count of terms")
        terms = seq.terms(length)
    else:
        terms = list(seq)
        if length is not None:
            terms = terms[:length]
        if not terms:
            raise ValueError("empty term list")
    if terms[0] != 1:
        return PrefixValidation(False, 0, VIOLATION_NONUNIT_BASE)
    for n in range(len(terms) - 1):
        if terms[n + 1] == terms[n]:
            return PrefixValidation(False, n, VIOLATION_EQUAL_TERMS)
        if terms[n + 1] % terms[n] != 0 or terms[n + 1] < terms[n]:
            return PrefixValidation(False, n, VIOLATION_NOT_DIVISOR)
    return PrefixValidation(True, None, None)


# -- prefix predicates for the side hypotheses some results need ----------


def exponent_gaps(seq: PivotSequence, length: int) -> list[int] | None:
    """Consecutive exponent gaps a_{n+1} - a_n over the prefix, for
    two-power chains; None for multiplier chains."""
    if not seq.is_two_power:
        return None
    exps = [seq.exponent(n) for n in range(length)]
    return [exps[n + 1] - exps[n] for n in range(length - 1)]


def has_min_exponent_gap(seq: PivotSequence, length: int, gap: int, start: int = 1) -> bool:
    """Whether a_{n+1} - a_n >= gap for all n in [start, length-2]."""
    gaps = exponent_gaps(seq, length)
    if gaps is None:
        return False
    return all(g >= gap for g in gaps[start:])


def gaps_strictly_increasing(seq: PivotSequence, length: int) -> bool:
    """Whether the exponent gaps a_{n+1} - a_n increase strictly over the prefix."""
    gaps = exponent_gaps(seq, length)
    if gaps is None:
        return False
    return all(gaps[n + 1] > gaps[n] for n in range(len(gaps) - 1))
