"""Shared fixtures and independent oracles used across the suite.

The oracles deliberately avoid the library's own kernels: word
enumeration decodes indices in base m+1 and evaluates offsets by direct
power sums, so agreement with the sweep-line/branch-and-prune paths is a
genuine cross-check.
"""
from __future__ import annotations

import numpy as np
import pytest

from locdim import IFSSpec, build_bernoulli


def brute_force_images(spec: IFSSpec, ilo: float, ihi: float, n: int):
    """(lo, hi, weight) arrays for all words, by base-(m+1) index decoding."""
    m1 = spec.m + 1
    count = m1**n
    idx = np.arange(count)
    offsets = np.zeros(count)
    weights = np.ones(count)
    digits = np.asarray(spec.digits)
    probs = np.asarray(spec.probs)
    for pos in range(n):
        # symbol at position pos (most significant first)
        sym = (idx // m1 ** (n - 1 - pos)) % m1
        offsets += digits[sym] * spec.rho**pos
        weights *= probs[sym]
    scale = spec.rho**n
    return offsets + scale * ilo, offsets + scale * ihi, weights


def brute_force_N(spec: IFSSpec, x: float, n: int, ilo: float = 0.0, ihi: float = 1.0) -> float:
    """N_n(x, I) by full enumeration and closed membership tests."""
    lo, hi, w = brute_force_images(spec, ilo, ihi, n)
    return float(w[(lo <= x) & (x <= hi)].sum())


@pytest.fixture
def bc08() -> IFSSpec:
    """Unbiased two-map spec at rho = 0.8."""
    return build_bernoulli(0.8, 0.5)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
