"""Digit expansions adapted to overlapping IFSs.

Two expansion algorithms are provided.  Both maintain the invariant that
after n digits, x lies in the image of [0,1] under the chosen length-n
word, so every prefix is a valid presentation prefix of x.

* The lazy-style expansion (two-sided overlap not required) shifts each
  digit cutover upward by the overlap slack xi, which forces a nonzero
  digit at least once every J steps, where rho^J < xi.
* The left/middle/right expansion (needs the stronger two-sided overlap)
  prefers interior digits on the middle regions M_j = [d_j + xi,
  d_j + rho - xi] and guarantees an interior digit in every window of J
  consecutive digits after the first one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ifs import IFSSpec, SpecError, strict_overlap, unbiased_overlap
from .analytic import overlap_slack

XI_SAFETY = 1.0 - 1e-9


@dataclass(frozen=True)
class Expansion:
    digits: tuple[int, ...]
    xi: float
    J: int
    kind: str  # "lazy" | "lmr"
    alphabet_max: int


def _window_from_slack(rho: float, xi: float) -> int:
    j = 1
    power = rho
    while power >= xi:
        j += 1
        power *= rho
    return j


def choose_xi_lazy(spec: IFSSpec) -> float:
    """Largest usable slack for the lazy-style expansion (scaled slightly
    below the overlap slack so all region inequalities stay strict)."""
    if not strict_overlap(spec):
        raise SpecError("lazy expansion requires strict overlap")
    return overlap_slack(spec) * XI_SAFETY


def choose_xi_lmr(spec: IFSSpec) -> float:
    """Largest slack satisfying the three region conditions of the
    left/middle/right expansion, scaled slightly below the bound.

    The conditions are linear in xi:
      (1) d_j + rho - xi > d_{j+1} + xi          (middle regions chain)
      (2) rho (d_{m-1} + rho - xi) > d_1 + xi    (right region recurses)
      (3) d_m + rho (d_1 + xi) < d_{m-1} + rho - xi   (left region recurses)
    """
    if not unbiased_overlap(spec):
        raise SpecError("left/middle/right expansion requires two-sided overlap")
    d, rho, m = spec.digits, spec.rho, spec.m
    xi1 = min(d[j] + rho - d[j + 1] for j in range(m)) / 2.0
    xi2 = (rho * (d[m - 1] + rho) - d[1]) / (1.0 + rho)
    xi3 = (d[m - 1] + rho - d[m] - rho * d[1]) / (1.0 + rho)
    xi = min(xi1, xi2, xi3) * XI_SAFETY
    if xi <= 0.0:
        raise SpecError("no positive slack: overlap at the boundary")
    return xi


def lazy_expansion(spec: IFSSpec, x: float, n_digits: int) -> Expansion:
    """Digit sequence with cutovers at d_j + xi.

    After rescaling y = S_w^{-1}(x) at each step, the next digit is the
    largest j with y > d_j + xi (0 when there is none).  Ties resolve to
    the lower digit.
    """
    if not 0.0 < x <= 1.0:
        raise ValueError(f"x={x} outside (0, 1]")
    xi = choose_xi_lazy(spec)
    d, rho, m = spec.digits, spec.rho, spec.m
    digits = []
    y = x
    for _ in range(n_digits):
        a = 0
        for j in range(m, 0, -1):
            if y > d[j] + xi:
                a = j
                break
        digits.append(a)
        y = (y - d[a]) / rho
        y = min(max(y, 0.0), 1.0)
    return Expansion(
        digits=tuple(digits), xi=xi, J=_window_from_slack(rho, xi),
        kind="lazy", alphabet_max=m,
    )


def lmr_expansion(spec: IFSSpec, x: float, n_digits: int) -> Expansion:
    """Digit sequence preferring interior digits.

    The next digit is the smallest interior j with y in
    [d_j + xi, d_j + rho - xi]; failing that, 0 on the left region
    [0, d_1 + xi) and m on the right region (d_{m-1} + rho - xi, 1].
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"x={x} outside (0, 1)")
    xi = choose_xi_lmr(spec)
    d, rho, m = spec.digits, spec.rho, spec.m
    digits = []
    y = x
    for _ in range(n_digits):
        a = None
        for j in range(1, m):
            if d[j] + xi <= y <= d[j] + rho - xi:
                a = j
                break
        if a is None:
            a = 0 if y < d[1] + xi else m
        digits.append(a)
        y = (y - d[a]) / rho
        y = min(max(y, 0.0), 1.0)
    return Expansion(
        digits=tuple(digits), xi=xi, J=_window_from_slack(rho, xi),
        kind="lmr", alphabet_max=m,
    )


def nonzero_density(expansion: Expansion, excluded: Iterable[int] | None = None) -> float:
    """Fraction of digits outside the excluded set ({0} for lazy,
    {0, m} for left/middle/right when not given explicitly)."""
    if not expansion.digits:
        raise ValueError("empty digit sequence")
    if excluded is None:
        excluded = {0} if expansion.kind == "lazy" else {0, expansion.alphabet_max}
    excluded = set(excluded)
    kept = sum(1 for a in expansion.digits if a not in excluded)
    return kept / len(expansion.digits)


def reconstruct(spec: IFSSpec, digits: Iterable[int]) -> float:
    """Partial sum sum_i d_{a_i} rho^{i-1}; converges to x as the digit
    count grows, with error at most rho^N."""
    total = 0.0
    power = 1.0
    for a in digits:
        total += spec.digits[a] * power
        power *= spec.rho
    return total


def digit_run_bound(expansion: Expansion) -> int:
    """Longest run of excluded digits after the first non-excluded digit."""
    excluded = {0} if expansion.kind == "lazy" else {0, expansion.alphabet_max}
    runs = []
    run = 0
    seen = False
    for a in expansion.digits:
        if a not in excluded:
            if seen:
                runs.append(run)
            seen = True
            run = 0
        elif seen:
            run += 1
    return max(runs) if runs else 0


def window_satisfied(expansion: Expansion) -> bool:
    """True iff every window of J digits after the first interior digit
    contains an interior digit."""
    return digit_run_bound(expansion) < expansion.J
