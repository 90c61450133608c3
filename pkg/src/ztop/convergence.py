"""Prefix-based convergence testers for the linear and uniform topologies,
block statistics of integer sequences relative to a pivot chain, and the
built-in example sequence families.

Convergence to 0 is only semi-decidable from a finite prefix, so every test
returns an explicit Verdict over a horizon:

* ``stabilized`` -- the trailing indices [j*, horizon] are all members and
  the clean tail covers at least half the window; j* is minimal. Evidence,
  not proof.
* ``falsified`` -- certified failures persist into the upper half of the
  window (in particular whenever the final index fails). Each witness is a
  hard certificate: a concrete index n with l_j / b_n outside the target
  arc (uniform) or b_n not dividing l_j (linear).
* ``inconclusive`` -- the scan hit the chain's bit budget before the
  horizon.

Block statistics: settle index j_n is the least index from which b_n
divides every term; block M_n spans [j_n, j_{n+1}) (just {j_n} when the two
settle indices coincide); the peak S_n is max |l_j| / b_{n+1} over the
block, kept as an exact rational. S_n -> 0 is a sufficient condition for
convergence in the uniform topology, and the built-in families reproduce
the standard counterexamples showing it is not necessary.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from ztop._kernels import member_direct_scan, wrap_half
from ztop.neighborhoods import NeighborhoodSpec, Uniform
from ztop.pivots import BitBudgetExceeded, PivotSequence
from ztop.torus import TorusPoint, check_level

FAMILIES = (
    "pow2",
    "geomdiff",
    "wgeomdiff",
    "blockexample",
    "pivothalf",
    "pivotsucc",
    "zero",
)

_NEEDS_PIVOTS = {"geomdiff", "wgeomdiff", "pivothalf", "pivotsucc"}


class IntegerSequence(NamedTuple):
    """A named integer sequence l_1, l_2, ... with exact evaluation.

    ``pivots`` feeds the chain-derived families (geomdiff, wgeomdiff,
    pivothalf, pivotsucc). ``fn`` backs the programmatic ``custom`` family,
    which has no CLI text form.
    """

    family: str
    pivots: Optional[PivotSequence] = None
    fn: Optional[Callable[[int], int]] = None


def make_sequence(
    family: str,
    pivots: PivotSequence | None = None,
    fn: Callable[[int], int] | None = None,
) -> IntegerSequence:
    if family == "custom":
        if fn is None:
            raise ValueError("custom sequences need a callable")
        return IntegerSequence("custom", pivots, fn)
    if family not in FAMILIES:
        raise ValueError(f"unknown sequence family {family!r}")
    if family in _NEEDS_PIVOTS and pivots is None:
        raise ValueError(f"family {family!r} is defined over a pivot chain")
    return IntegerSequence(family, pivots, fn)


def eval_sequence(seq: IntegerSequence, j: int) -> int:
    """Exact term l_j, j >= 1. Chain-derived families inherit the chain's
    bit budget; the pure two-power families guard the shift width directly."""
    if j < 1:
        raise ValueError("sequence index must be >= 1")
    fam = seq.family
    if fam == "zero":
        return 0
    if fam == "custom":
        return int(seq.fn(j))
    if fam == "pow2":
        _check_shift(seq, j)
        return 1 << j
    if fam == "blockexample":
        r = math.isqrt(j + 2)
        if r * r == j + 2 and r >= 2:
            _check_shift(seq, j + 2)
            return 1 << (j + 2)
        _check_shift(seq, j)
        return 1 << j
    b = seq.pivots.term
    if fam == "geomdiff":
        return b(j + 1) - b(j)
    if fam == "wgeomdiff":
        return j * b(j + 1) - b(j)
    if fam == "pivothalf":
        return b(j) * (b(j + 1) // (2 * b(j)))
    if fam == "pivotsucc":
        return b(j + 1)
    raise ValueError(f"unknown sequence family {fam!r}")


def _check_shift(seq, width):
    from ztop.pivots import DEFAULT_BIT_BUDGET

    budget = seq.pivots.bit_budget if seq.pivots is not None else DEFAULT_BIT_BUDGET
    if width + 1 > budget:
        raise BitBudgetExceeded(f"term needs {width + 1} bits (budget {budget})")


# -- membership scans with certificates -------------------------------------


class Witness(NamedTuple):
    """Certified failure: l_j lands outside the neighbourhood, witnessed at
    chain index n; ``value`` is the exact circle point l_j / b_n for uniform
    specs and None for linear ones (where the certificate is b_n not
    dividing l_j)."""

    j: int
    n: int
    value: Optional[TorusPoint]


def _first_uniform_failure(l: int, pivots: PivotSequence, m: int):
    """(n, point) for the least index n putting l/b_n outside the level-m arc,
    or None when l is a member."""
    if l == 0:
        return None
    al = -l if l < 0 else l
    terms = pivots.terms_until(4 * m * al)
    if member_direct_scan(l, terms, m):
        return None
    bound = 4 * m * al
    n = 1
    while True:
        b = terms[n]
        if b >= bound:
            raise AssertionError("scan disagreement: no failing index found")
        t = wrap_half(l, b)
        ta = -t if t < 0 else t
        if 4 * m * ta > b:
            return n, TorusPoint(Fraction(t, b))
        n += 1


class Verdict(NamedTuple):
    outcome: str  # "stabilized" | "falsified" | "inconclusive"
    stabilized_at: Optional[int]
    witnesses: tuple[Witness, ...]
    horizon: int
    spec: NeighborhoodSpec
    note: str = ""


def prefix_test(seq: IntegerSequence, spec: NeighborhoodSpec, horizon: int) -> Verdict:
    """Scan l_1..l_horizon for membership in the neighbourhood.

    Stabilization policy: with no failures the verdict stabilizes at 1;
    otherwise let j_last be the last failing index. A clean tail covering
    at least half the window (j_last < ceil(horizon/2)) stabilizes at
    j_last + 1, minimal by construction; failures reaching the upper half
    falsify, with every failing (j, n) pair listed. Hitting the bit budget
    yields an inconclusive verdict.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    fails: list[Witness] = []
    try:
        for j in range(1, horizon + 1):
            lj = eval_sequence(seq, j)
            if isinstance(spec.family, Uniform):
                hit = _first_uniform_failure(lj, spec.pivots, spec.family.m)
                if hit is not None:
                    fails.append(Witness(j, hit[0], hit[1]))
            else:
                n = spec.family.n
                if lj % spec.pivots.term(n) != 0:
                    fails.append(Witness(j, n, None))
    except BitBudgetExceeded as exc:
        return Verdict("inconclusive", None, tuple(fails), horizon, spec, note=str(exc))
    if not fails:
        return Verdict("stabilized", 1, (), horizon, spec)
    last = fails[-1].j
    if last >= (horizon + 1) // 2:
        return Verdict("falsified", None, tuple(fails), horizon, spec)
    return Verdict("stabilized", last + 1, tuple(fails), horizon, spec)


def falsify_uniform(
    seq: IntegerSequence, pivots: PivotSequence, m: int, horizon: int
) -> list[Witness]:
    """Every index j <= horizon whose term falls outside the level-m uniform
    neighbourhood, each with its least certifying chain index and the exact
    circle value there. Sorted by j; empty means no witness below horizon."""
    check_level(m)
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    out = []
    for j in range(1, horizon + 1):
        hit = _first_uniform_failure(eval_sequence(seq, j), pivots, m)
        if hit is not None:
            out.append(Witness(j, hit[0], hit[1]))
    return out


# -- block statistics --------------------------------------------------------


class BlockStatistics(NamedTuple):
    """Settle indices, blocks, and exact peak ratios of a sequence prefix.

    ``settle``: n -> j_n for every level with a settle index inside the
    horizon. ``blocks``: n -> (first, last) index span of M_n, present for
    n = 0 (the pre-settle stub, possibly empty) up to the last level whose
    successor settle index exists. ``peaks``: n -> max |l_j| / b_{n+1} over
    the block, omitted for empty blocks. ``missing``: levels whose settle
    index does not exist within the horizon (divisibility still failing at
    the final index).
    """

    settle: dict[int, int]
    blocks: dict[int, tuple[int, int]]
    peaks: dict[int, Fraction]
    missing: tuple[int, ...]
    horizon: int
    note: str = ""

    def block_indices(self, n: int) -> range:
        lo, hi = self.blocks[n]
        return range(lo, hi + 1)


def block_statistics(
    seq: IntegerSequence,
    pivots: PivotSequence,
    horizon: int,
    levels: int | None = None,
) -> BlockStatistics:
    """Compute j_n / M_n / S_n over the prefix l_1..l_horizon.

    ``levels`` caps the number of divisibility levels n; by default levels
    grow until a settle index is missing, the bit budget is hit, or n
    reaches the horizon. Blocks may repeat an index when consecutive settle
    indices coincide (the degenerate rule M_n = {j_n}); for strictly
    increasing settle indices they partition [j_1, horizon].
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    values = [eval_sequence(seq, j) for j in range(1, horizon + 1)]
    cap = levels if levels is not None else horizon
    settle: dict[int, int] = {}
    missing: list[int] = []
    note = ""
    n_top = 0
    for n in range(1, cap + 2):
        try:
            b = pivots.term(n)
        except BitBudgetExceeded as exc:
            note = str(exc)
            break
        last_bad = 0
        for j in range(horizon, 0, -1):
            if values[j - 1] % b != 0:
                last_bad = j
                break
        if last_bad == horizon:
            missing.append(n)
            break
        settle[n] = last_bad + 1
        n_top = n
    blocks: dict[int, tuple[int, int]] = {}
    peaks: dict[int, Fraction] = {}
    if settle:
        blocks[0] = (1, settle[1] - 1)  # empty when j_1 == 1
        for n in range(1, n_top):
            jn, jn1 = settle[n], settle[n + 1]
            blocks[n] = (jn, jn) if jn == jn1 else (jn, jn1 - 1)
        for n, (lo, hi) in blocks.items():
            if lo > hi:
                continue
            try:
                bn1 = pivots.term(n + 1)
            except BitBudgetExceeded as exc:
                note = str(exc)
                break
            peak = max(abs(values[j - 1]) for j in range(lo, hi + 1))
            peaks[n] = Fraction(peak, bn1)
    return BlockStatistics(settle, blocks, peaks, tuple(missing), horizon, note)


class PeakDecayEntry(NamedTuple):
    m: int
    applicable: bool
    settled_level: Optional[int]  # least n0 with S_n < 1/(4m) for all computed n >= n0
    crosscheck_ok: Optional[bool]


class PeakDecayReport(NamedTuple):
    stats: BlockStatistics
    entries: tuple[PeakDecayEntry, ...]


def peak_decay_report(
    seq: IntegerSequence,
    pivots: PivotSequence,
    horizon: int,
    thresholds: tuple[int, ...] | list[int],
    levels: int | None = None,
) -> PeakDecayReport:
    """For each requested arc level m, locate the least block level n0 from
    which every computed peak stays below 1/(4m), or report the sufficient
    condition as not applicable.

    When n0 exists the report cross-checks the implied membership: the
    level-m prefix test must not certify failures at or beyond block n0.
    """
    stats = block_statistics(seq, pivots, horizon, levels=levels)
    entries = []
    computed = sorted(stats.peaks)
    for m in thresholds:
        check_level(m)
        if not computed:
            entries.append(PeakDecayEntry(m, False, None, None))
            continue
        last_bad = None
        for n in computed:
            if 4 * m * stats.peaks[n].numerator >= stats.peaks[n].denominator:
                last_bad = n
        if last_bad is None:
            n0 = computed[0]
        elif last_bad == computed[-1]:
            entries.append(PeakDecayEntry(m, False, None, None))
            continue
        else:
            n0 = min(n for n in computed if n > last_bad)
        first_j = stats.blocks[n0][0]
        verdict = prefix_test(seq, NeighborhoodSpec(pivots, Uniform(m)), horizon)
        cross = all(w.j < first_j for w in verdict.witnesses)
        entries.append(PeakDecayEntry(m, True, n0, cross))
    return PeakDecayReport(stats, tuple(entries))
