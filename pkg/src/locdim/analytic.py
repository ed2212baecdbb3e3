"""Closed-form bounds on the set of local dimensions.

All bounds return an :class:`AnalyticBound` whose ``valid`` flag records
whether the hypotheses hold; sweeps plot only valid segments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .ifs import EPS, IFSSpec, strict_overlap

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
ERDOS_K_CAP = 64


class BoundMethod(str, Enum):
    DIM_AT_ZERO = "DimAtZero"
    ERDOS_UPPER = "ErdosUpper"
    XI_BIASED_UPPER = "XiBiasedUpper"
    BIASED_COROLLARY = "BiasedCorollary"
    COVERAGE_UPPER = "CoverageUpper"
    COVERAGE_LOWER = "CoverageLower"


@dataclass(frozen=True)
class AnalyticBound:
    method: BoundMethod
    value: float
    valid: bool
    reason: str = ""
    params: dict = field(default_factory=dict)

    @staticmethod
    def invalid(method: BoundMethod, reason: str) -> "AnalyticBound":
        return AnalyticBound(method=method, value=math.nan, valid=False, reason=reason)


def dim_at_zero(spec: IFSSpec) -> float:
    """Local dimension at the left endpoint of the support: log p_0 / log rho."""
    return math.log(spec.probs[0]) / math.log(spec.rho)


def erdos_k(rho: float) -> int | None:
    """Smallest k >= 3 with rho^2 + ... + rho^k > 1, or None when no such
    k exists (rho at or below the golden threshold) or k would exceed
    the cap, where the resulting bound is vacuous anyway."""
    if not 0.0 < rho < 1.0:
        return None
    s = 0.0
    power = rho
    for k in range(2, ERDOS_K_CAP + 1):
        power *= rho
        s += power
        if k >= 3 and s > 1.0:
            return k
    return None


def erdos_upper_bound(rho: float) -> AnalyticBound:
    """Counting upper bound (1 - 1/k) log 2 / |log rho| on every local
    dimension away from the endpoints, for the unbiased two-map measure
    with rho above the golden threshold."""
    method = BoundMethod.ERDOS_UPPER
    if rho <= GOLDEN:
        return AnalyticBound.invalid(method, "rho_below_golden_threshold")
    k = erdos_k(rho)
    if k is None:
        return AnalyticBound.invalid(method, "no_admissible_k")
    value = (1.0 - 1.0 / k) * math.log(2.0) / abs(math.log(rho))
    return AnalyticBound(method=method, value=value, valid=True, params={"k": k})


def overlap_slack(spec: IFSSpec) -> float:
    """min_j (d_{j-1} + rho - d_j): how far consecutive images overlap."""
    return min(
        spec.digits[j - 1] + spec.rho - spec.digits[j] for j in range(1, spec.m + 1)
    )


def xi_biased_upper_bound(spec: IFSSpec) -> AnalyticBound:
    """Upper bound on local dimensions away from 0 when p_0 is the unique
    minimum and images strictly overlap, from the overlap slack xi:

        [log(min_{j!=0} p_j) + (log xi / log rho - 1) log p_0] / log xi
    """
    method = BoundMethod.XI_BIASED_UPPER
    if not strict_overlap(spec):
        return AnalyticBound.invalid(method, "no_strict_overlap")
    p0 = spec.probs[0]
    others = spec.probs[1:]
    if not all(p0 < pj - EPS for pj in others):
        return AnalyticBound.invalid(method, "p0_not_unique_minimum")
    xi = overlap_slack(spec)
    pmin = min(others)
    value = (math.log(pmin) + (math.log(xi) / math.log(spec.rho) - 1.0) * math.log(p0)) / math.log(xi)
    assert value < dim_at_zero(spec)
    return AnalyticBound(method=method, value=value, valid=True, params={"xi": xi})


def biased_corollary_bound(rho: float, p0: float) -> AnalyticBound:
    """Specialisation (2/3 log p0 + 1/3 log(1-p0)) / log rho for biased
    two-map measures with rho above the golden threshold."""
    method = BoundMethod.BIASED_COROLLARY
    if rho <= GOLDEN:
        return AnalyticBound.invalid(method, "rho_below_golden_threshold")
    if not 0.0 < p0 < 1.0:
        return AnalyticBound.invalid(method, "p0_out_of_range")
    if p0 >= 1.0 - p0 - EPS:
        return AnalyticBound.invalid(method, "p0_not_strictly_smaller")
    value = (2.0 / 3.0 * math.log(p0) + 1.0 / 3.0 * math.log(1.0 - p0)) / math.log(rho)
    return AnalyticBound(method=method, value=value, valid=True)
