"""Coverage counts of word images and the bounds they imply.

For a valid spec and a word length n, every length-n word w maps an
interval I to a weighted interval (S_w(I), p_w).  The coverage function

    N_n(x, I) = total weight of words w with x in S_w(I)

is piecewise constant; this module builds its profile by a sweep line,
extracts k = min over I of N_n(., I) (upper bounds on local dimensions)
and sup over [0,1] of N_n (conditional lower bounds), and checks the
interval-admissibility hypothesis of the upper-bound theorem.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from . import kernels
from .analytic import BoundMethod
from .ifs import EPS, IFSSpec, Interval, UNIT, Word, validate

MAX_WORDS = 2**24
MAX_N = 20

#: Symmetric candidate intervals tried by :func:`upper_bound`, besides the
#: rho-dependent one that is always admissible.
CANDIDATE_INTERVALS = ((0.1, 0.9), (0.2, 0.8), (0.3, 0.7))


@dataclass(frozen=True)
class WeightedInterval:
    lo: float
    hi: float
    weight: float
    word: Word


@dataclass
class CoverageProfile:
    """Piecewise-constant total weight over an interval arrangement.

    ``cell_weights[t]`` is the value on the open cell
    (breakpoints[t], breakpoints[t+1]).
    """

    breakpoints: np.ndarray
    cell_weights: np.ndarray

    def value_at(self, x: float) -> float:
        """Profile value at a point not within eps of a breakpoint."""
        t = int(np.searchsorted(self.breakpoints, x)) - 1
        if t < 0 or t >= len(self.cell_weights):
            return 0.0
        return float(self.cell_weights[t])

    def max_cell(self) -> tuple[float, Interval]:
        """Largest cell weight and the leftmost witness cell."""
        t = int(np.argmax(self.cell_weights))
        return float(self.cell_weights[t]), Interval(
            float(self.breakpoints[t]), float(self.breakpoints[t + 1])
        )


@dataclass(frozen=True)
class BoundResult:
    rho: float
    method: BoundMethod
    n: int
    interval: Interval | None
    value: float
    valid: bool
    reason: str = ""
    hypothesis_checked: bool = False
    awsc_required: bool = False
    awsc_certified: bool = False
    witness: Interval | None = None


def _require_valid(spec: IFSSpec) -> None:
    report = validate(spec, require_full_support=False)
    if not report:
        raise ValueError("invalid spec: " + "; ".join(report.violations))


def _guard_n(spec: IFSSpec, n: int) -> None:
    if n < 0 or n > MAX_N or (spec.m + 1) ** n > MAX_WORDS:
        raise ValueError(f"word length n={n} exceeds the enumeration cap")


def _clamp_n(spec: IFSSpec, n_max: int) -> int:
    """Largest searchable word length within the enumeration cap."""
    n = min(n_max, MAX_N)
    while n > 0 and (spec.m + 1) ** n > MAX_WORDS:
        n -= 1
    return n


def enumerate_images(spec: IFSSpec, interval: Interval, n: int) -> list[WeightedInterval]:
    """All (m+1)^n weighted images of the interval, in lexicographic word
    order (first symbol most significant)."""
    _require_valid(spec)
    _guard_n(spec, n)
    offs, wts = kernels.word_offsets(spec.rho, spec.digits, spec.probs, n)
    scale = spec.rho**n
    words = product(spec.alphabet, repeat=n)
    return [
        WeightedInterval(
            lo=float(o + scale * interval.lo),
            hi=float(o + scale * interval.hi),
            weight=float(w),
            word=word,
        )
        for (o, w, word) in zip(offs, wts, words)
    ]


def coverage_profile(images: Sequence[WeightedInterval], eps: float = EPS) -> CoverageProfile:
    """Sweep-line profile of a nonempty arrangement; endpoints within eps
    are merged into one breakpoint."""
    if not images:
        raise ValueError("empty image sequence")
    lo = np.array([im.lo for im in images])
    hi = np.array([im.hi for im in images])
    w = np.array([im.weight for im in images])
    bps, cells = kernels.profile_cells(lo, hi, w, eps)
    return CoverageProfile(breakpoints=bps, cell_weights=cells)


def min_coverage(spec: IFSSpec, interval: Interval, n: int) -> float:
    """k = minimum of N_n(., I) over the interior of I (0.0 when part of
    the interior is uncovered)."""
    _require_valid(spec)
    _guard_n(spec, n)
    if n == 0:
        return 1.0
    out = kernels.coverage_min_levels(
        spec.rho, spec.digits, spec.probs, interval.lo, interval.hi, n
    )
    return float(out[n - 1])


def sup_coverage(spec: IFSSpec, n: int) -> tuple[float, Interval]:
    """Largest cell weight of the N_n(., [0,1]) profile plus the leftmost
    witness cell (a cell, not a single point)."""
    _require_valid(spec)
    _guard_n(spec, n)
    if n == 0:
        return 1.0, Interval(0.0, 1.0)
    profile = coverage_profile(enumerate_images(spec, UNIT, n))
    return profile.max_cell()


def sup_coverage_levels(spec: IFSSpec, n_max: int) -> np.ndarray:
    """Cell suprema of N_n(., [0,1]) for every n = 1..n_max in one pass."""
    _require_valid(spec)
    _guard_n(spec, n_max)
    return kernels.coverage_sup_levels(spec.rho, spec.digits, spec.probs, n_max)


def pointwise_N(spec: IFSSpec, x: float, n: int, interval: Interval = UNIT) -> float:
    """N_n(x, I) by branch-and-prune descent: subtrees whose image of I
    cannot contain x are skipped.  Agrees with full enumeration."""
    _require_valid(spec)
    _guard_n(spec, n)
    return float(
        kernels.pointwise_weight(
            spec.rho, spec.digits, spec.probs, x, n, interval.lo, interval.hi
        )
    )


@dataclass(frozen=True)
class AdmissibleResult:
    ok: bool
    n: int | None = None
    reason: str = ""


def _union_covers(spec: IFSSpec, interval: Interval, n: int, a: float) -> bool:
    """Does the union of level-n images of the interval cover (a, 1-a)?"""
    offs, _ = kernels.word_offsets(spec.rho, spec.digits, spec.probs, n)
    scale = spec.rho**n
    lo = np.sort(offs) + scale * interval.lo
    hi = np.sort(offs) + scale * interval.hi
    cover = a
    for l, h in zip(lo, hi):
        if l > cover + EPS:
            return False
        cover = max(cover, h)
        if cover >= 1.0 - a - EPS:
            return True
    return cover >= 1.0 - a - EPS


def admissible_interval(spec: IFSSpec, interval: Interval, n_max: int = 10) -> AdmissibleResult:
    """Check that every point of (0,1) is eventually covered by images of
    the interval, as required by the coverage upper-bound theorem.

    A symmetric seed (a, 1-a) self-expands (its level-n image unions grow
    to (0,1)) when consecutive images of it overlap, i.e. when
    a < (1 - gap/rho)/2 for the largest digit gap; for two-map specs this
    is the threshold 1 - 1/(2 rho).  A symmetric interval below the
    threshold qualifies directly; otherwise the interval qualifies if its
    level-n images cover the half-threshold seed for some n <= n_max, and
    is reported not verified (and skipped by the bound search) if not.
    """
    _require_valid(spec)
    b = interval.lo
    gap = max(spec.digits[j + 1] - spec.digits[j] for j in range(spec.m))
    direct_bound = 0.5 * (1.0 - gap / spec.rho)
    symmetric = abs(interval.lo + interval.hi - 1.0) <= EPS
    if symmetric and 0.0 < b < direct_bound - EPS:
        return AdmissibleResult(ok=True, n=0)
    if direct_bound <= EPS:
        return AdmissibleResult(ok=False, reason="no overlap margin: no covering seed interval")
    a = direct_bound / 2.0
    for n in range(1, n_max + 1):
        if (spec.m + 1) ** n > MAX_WORDS:
            break
        if _union_covers(spec, interval, n, a):
            return AdmissibleResult(ok=True, n=n)
    return AdmissibleResult(ok=False, reason=f"union test failed for n <= {n_max}")


def _candidate_intervals(spec: IFSSpec) -> list[Interval]:
    cands = []
    gap = max(spec.digits[j + 1] - spec.digits[j] for j in range(spec.m))
    seed = 0.25 * (1.0 - gap / spec.rho)  # half the self-expansion threshold
    if seed > EPS:
        cands.append(Interval(seed, 1.0 - seed))
    cands.extend(Interval(a, b) for a, b in CANDIDATE_INTERVALS)
    return cands


def upper_bound(
    spec: IFSSpec,
    n_max: int = 10,
    intervals: Sequence[Interval] | None = None,
) -> BoundResult:
    """Best (smallest) upper bound log k / (n log rho) over the admissible
    candidate intervals and word lengths n <= n_max, keeping only word
    lengths with positive minimum coverage k."""
    _require_valid(spec)
    if intervals is None:
        intervals = _candidate_intervals(spec)
    best: tuple[float, Interval, int] | None = None
    log_rho = math.log(spec.rho)
    for interval in intervals:
        if not admissible_interval(spec, interval, n_max).ok:
            continue
        ks = kernels.coverage_min_levels(
            spec.rho, spec.digits, spec.probs, interval.lo, interval.hi,
            _clamp_n(spec, n_max),
        )
        for n, k in enumerate(ks, start=1):
            if k <= 0.0:
                continue
            value = math.log(k) / (n * log_rho)
            if best is None or value < best[0]:
                best = (value, interval, n)
    if best is None:
        return BoundResult(
            rho=spec.rho, method=BoundMethod.COVERAGE_UPPER, n=0, interval=None,
            value=math.nan, valid=False,
            reason="no admissible interval with positive coverage",
            hypothesis_checked=True,
        )
    value, interval, n = best
    return BoundResult(
        rho=spec.rho, method=BoundMethod.COVERAGE_UPPER, n=n, interval=interval,
        value=value, valid=True, hypothesis_checked=True,
    )


def lower_bound(spec: IFSSpec, n: int) -> BoundResult:
    """Conditional lower bound log(sup N_n) / (n log rho) on every local
    dimension; meaningful only under the asymptotically weak separation
    condition, recorded by the ``awsc_required`` flag.  The certificate
    flag stays False until an algebraic certificate is attached."""
    _require_valid(spec)
    if n < 1:
        raise ValueError("lower bound needs n >= 1")
    sup, witness = sup_coverage(spec, n)
    value = math.log(sup) / (n * math.log(spec.rho))
    return BoundResult(
        rho=spec.rho, method=BoundMethod.COVERAGE_LOWER, n=n, interval=None,
        value=value, valid=True, hypothesis_checked=True,
        awsc_required=True, awsc_certified=False, witness=witness,
    )


def best_lower_bound(spec: IFSSpec, n_max: int = 10) -> BoundResult:
    """Largest conditional lower bound over word lengths n <= n_max
    (clamped to the enumeration cap)."""
    _require_valid(spec)
    if n_max < 1:
        raise ValueError("lower bound needs n_max >= 1")
    sups = sup_coverage_levels(spec, _clamp_n(spec, n_max))
    log_rho = math.log(spec.rho)
    values = [math.log(s) / (n * log_rho) for n, s in enumerate(sups, start=1)]
    n_best = int(np.argmax(values)) + 1
    return BoundResult(
        rho=spec.rho, method=BoundMethod.COVERAGE_LOWER, n=n_best, interval=None,
        value=values[n_best - 1], valid=True, hypothesis_checked=True,
        awsc_required=True, awsc_certified=False,
    )
