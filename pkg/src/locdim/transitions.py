"""Transition points of two-map families: contraction factors where a
left endpoint of one word image coincides with a right endpoint of
another, S_v(0) = S_w(1) with |v| = |w| = n.

Between consecutive transition points the combinatorics of the level-n
arrangement is frozen, so coverage extremes are locally constant in rho
and a whole parameter range can be evaluated from finitely many cells.

For digits (0, 1-rho) the coincidence equation depends only on the
difference vector c = v - w in {-1,0,1}^n:

    P_c(rho) = sum_i c_i rho^(i-1) (1 - rho) - rho^n = 0,

so enumeration is over difference vectors, with the canonical witness
pair v_i = max(c_i, 0), w_i = max(-c_i, 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import kernels
from .ifs import IFSSpec, Interval, build_bernoulli
from .coverage import min_coverage, sup_coverage_levels

MAX_TRANSITION_N = 12
ROOT_GRID = 2**12
ROOT_TOL = 1e-13
DEDUP_TOL = 1e-10
#: offset used to sample a constancy cell just right of its left edge
CELL_STEP = 1e-9


class ConstancyError(RuntimeError):
    """A quantity expected to be constant on a cell was not; the cell is
    named so a missed transition can be investigated."""


@dataclass(frozen=True)
class TransitionPolynomial:
    """P(rho) = S_v(0) - S_w(1) as coefficients in ascending powers."""

    coefficients: tuple[float, ...]
    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    def __call__(self, rho):
        return npoly.polyval(rho, np.asarray(self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass
class TransitionSet:
    n: int
    lo: float
    hi: float
    roots: np.ndarray
    witnesses: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)


def _difference_vectors(n: int) -> np.ndarray:
    reps = 3**n
    grid = np.array(np.unravel_index(np.arange(reps), (3,) * n)).T - 1
    return grid[np.any(grid != 0, axis=1)]


@lru_cache(maxsize=4)
def _coefficient_matrix(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(difference vectors, polynomial coefficients) for level n."""
    cs = _difference_vectors(n)
    coefs = np.zeros((len(cs), n + 1))
    for i in range(n):
        coefs[:, i] += cs[:, i]
        coefs[:, i + 1] -= cs[:, i]
    coefs[:, n] -= 1.0
    return cs, coefs


def _witness_pair(c: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    sigma = tuple(1 if ci > 0 else 0 for ci in c)
    tau = tuple(1 if ci < 0 else 0 for ci in c)
    return sigma, tau


def transition_polynomials(n: int) -> list[TransitionPolynomial]:
    """All distinct coincidence polynomials at level n, deduplicated up to
    sign and identical coefficient vectors, with canonical witness pairs."""
    if not 1 <= n <= MAX_TRANSITION_N:
        raise ValueError(f"level n={n} outside 1..{MAX_TRANSITION_N}")
    cs, coefs = _coefficient_matrix(n)
    seen: dict[tuple, int] = {}
    out: list[TransitionPolynomial] = []
    for c, coef in zip(cs, coefs):
        key = tuple(coef)
        for v in key:
            if v != 0.0:
                if v < 0.0:
                    key = tuple(-u for u in key)
                break
        if key in seen:
            continue
        seen[key] = 1
        sigma, tau = _witness_pair(c)
        out.append(TransitionPolynomial(coefficients=tuple(coef), sigma=sigma, tau=tau))
    return out


def _refine_bracket(coef: np.ndarray, a: float, b: float) -> float:
    """Bisect a sign-change bracket down to ROOT_TOL, then polish with a
    few Newton steps."""
    fa = npoly.polyval(a, coef)
    for _ in range(80):
        mid = 0.5 * (a + b)
        fm = npoly.polyval(mid, coef)
        if fa * fm <= 0.0:
            b = mid
        else:
            a, fa = mid, fm
        if b - a < ROOT_TOL:
            break
    r = 0.5 * (a + b)
    dcoef = npoly.polyder(coef)
    for _ in range(3):
        dv = npoly.polyval(r, dcoef)
        if dv == 0.0:
            break
        r -= npoly.polyval(r, coef) / dv
    return r


def isolate_roots(poly: TransitionPolynomial, lo: float, hi: float,
                  grid: int = ROOT_GRID) -> np.ndarray:
    """Real roots strictly inside (lo, hi).

    Brackets come from sign changes on a uniform sample grid; grid points
    where |P| < ROOT_TOL without a sign change are polished by Newton
    descent and kept if they converge into the range.
    """
    coef = np.asarray(poly.coefficients)
    if not np.any(coef):
        raise ValueError("zero polynomial")
    xs = np.linspace(lo, hi, grid)
    vals = npoly.polyval(xs, coef)
    signs = np.sign(vals)
    roots = []
    for i in np.nonzero(signs[:-1] * signs[1:] < 0)[0]:
        roots.append(_refine_bracket(coef, xs[i], xs[i + 1]))
    # grazing roots: tiny |P| but no sign change
    dcoef = npoly.polyder(coef)
    for i in np.nonzero(np.abs(vals) < ROOT_TOL)[0]:
        r = xs[i]
        for _ in range(50):
            dv = npoly.polyval(r, dcoef)
            if dv == 0.0:
                break
            step = npoly.polyval(r, coef) / dv
            r -= step
            if abs(step) < ROOT_TOL:
                break
        if lo < r < hi and abs(npoly.polyval(r, coef)) < ROOT_TOL:
            roots.append(r)
    roots = np.sort(np.array(roots)) if roots else np.empty(0)
    keep = np.concatenate([[True], np.diff(roots) > DEDUP_TOL]) if len(roots) else []
    roots = roots[keep] if len(roots) else roots
    return roots[(roots > lo) & (roots < hi)]


def transition_set(n: int, lo: float, hi: float, grid: int = ROOT_GRID) -> TransitionSet:
    """All transition points of level n in (lo, hi), found by batched
    grid sign-change isolation over every coincidence polynomial, with
    roots deduplicated at DEDUP_TOL and cross-polynomial witnesses kept."""
    if not 1 <= n <= MAX_TRANSITION_N:
        raise ValueError(f"level n={n} outside 1..{MAX_TRANSITION_N}")
    cs, coefs = _coefficient_matrix(n)
    xs = np.linspace(lo, hi, grid)
    vander = np.vander(xs, n + 1, increasing=True)
    found: list[tuple[float, int]] = []
    block = max(1, 2**22 // grid)
    for start in range(0, len(coefs), block):
        sub = coefs[start:start + block]
        vals = vander @ sub.T
        signs = np.sign(vals)
        gi, pi = np.nonzero(signs[:-1, :] * signs[1:, :] < 0)
        for g, p in zip(gi, pi):
            r = _refine_bracket(sub[p], xs[g], xs[g + 1])
            if lo < r < hi:
                found.append((r, start + p))
    found.sort()
    roots: list[float] = []
    witnesses = []
    for r, idx in found:
        if roots and r - roots[-1] <= DEDUP_TOL:
            continue
        roots.append(r)
        witnesses.append(_witness_pair(cs[idx]))
    return TransitionSet(n=n, lo=lo, hi=hi, roots=np.array(roots), witnesses=witnesses)


@dataclass(frozen=True)
class BernoulliFamily:
    """One-parameter family rho -> two-map spec with fixed p0."""

    p0: float = 0.5

    def build(self, rho: float) -> IFSSpec:
        return build_bernoulli(rho, self.p0, allow_cantor=True)


@dataclass
class SweepCell:
    lo: float
    hi: float
    value: float


@dataclass
class ConstancySweep:
    cells: list[SweepCell]
    transitions: list[tuple[float, float]]  # (rho, value at the point)


def _stacked_sup(spec: IFSSpec, n: int) -> float:
    """sup over y of N_n(y) counting every closed image containing y,
    including coincident endpoints (the at-point value at a transition)."""
    offs, wts = kernels.word_offsets(spec.rho, spec.digits, spec.probs, n)
    scale = spec.rho**n
    lo, hi = offs, offs + scale
    points = np.unique(np.concatenate([lo, hi]))
    return float(kernels.point_stack_weight(lo, hi, wts, points).max())


def constancy_sweep(
    family: BernoulliFamily,
    n: int,
    lo: float,
    hi: float,
    quantity: str = "sup",
    interval: Interval | None = None,
) -> ConstancySweep:
    """Evaluate a coverage quantity across (lo, hi), split at level-n
    transitions.

    Each cell is evaluated at its midpoint and verified constant against
    the 1/4 and 3/4 points (tolerance 1e-12; violations raise
    :class:`ConstancyError` naming the cell).  At each transition point
    the quantity is evaluated with coincident endpoints merged; for the
    sup quantity the at-point stacked value is reported.
    """
    if quantity == "min":
        if interval is None:
            raise ValueError("min quantity needs an interval")
        evaluate: Callable[[float], float] = lambda rho: min_coverage(
            family.build(rho), interval, n
        )
        at_point = evaluate
    elif quantity == "sup":
        evaluate = lambda rho: float(sup_coverage_levels(family.build(rho), n)[n - 1])
        at_point = lambda rho: _stacked_sup(family.build(rho), n)
    else:
        raise ValueError(f"unknown quantity {quantity!r}")

    tset = transition_set(n, lo, hi)
    edges = np.concatenate([[lo], tset.roots, [hi]])
    cells = []
    for a, b in zip(edges[:-1], edges[1:]):
        samples = [a + (b - a) * t for t in (0.25, 0.5, 0.75)]
        values = [evaluate(s) for s in samples]
        if max(values) - min(values) > 1e-12:
            raise ConstancyError(
                f"quantity not constant on cell ({a}, {b}): {values}; "
                "a transition point may have been missed"
            )
        cells.append(SweepCell(lo=float(a), hi=float(b), value=values[1]))
    transitions = [(float(r), at_point(float(r))) for r in tset.roots]
    return ConstancySweep(cells=cells, transitions=transitions)


@dataclass
class RangeLowerBound:
    value: float
    argmin_rho: float
    n_max: int
    evaluations: list[tuple[float, float]]  # (rho evaluated, best bound there)


def best_lambda(spec: IFSSpec, n_max: int) -> float:
    """Largest conditional lower bound over word lengths 1..n_max."""
    sups = sup_coverage_levels(spec, n_max)
    log_rho = math.log(spec.rho)
    return max(math.log(s) / (n * log_rho) for n, s in enumerate(sups, start=1))


def lower_bound_over_range(
    family: BernoulliFamily,
    n_max: int,
    lo: float,
    hi: float,
    transitions: TransitionSet | None = None,
) -> RangeLowerBound:
    """Infimum over rho in [lo, hi] of the best conditional lower bound
    with word lengths up to n_max.

    The best bound is nondecreasing in rho on each constancy cell (the
    coverage suprema are frozen there while |log rho| shrinks), so the
    infimum is attained at cell left edges: the range start and the
    right-hand limit at each transition point, sampled at rho + CELL_STEP.
    """
    if transitions is None:
        transitions = transition_set(n_max, lo, hi)
    eval_points = np.concatenate([[lo], transitions.roots])
    evaluations = []
    best_value = math.inf
    best_rho = lo
    for r in eval_points:
        rho = float(r) + CELL_STEP
        value = best_lambda(family.build(rho), n_max)
        evaluations.append((rho, value))
        if value < best_value:
            best_value = value
            best_rho = float(r)
    return RangeLowerBound(
        value=best_value, argmin_rho=best_rho, n_max=n_max, evaluations=evaluations
    )
