"""Backend equivalence: the compiled kernels and the numpy fallback must
agree on every contract."""
import numpy as np
import pytest

from locdim import kernels
from locdim import _pykernels
from conftest import brute_force_images


def random_spec_arrays(rng):
    m = int(rng.integers(1, 4))
    rho = float(rng.uniform(0.3, 0.9))
    cuts = np.sort(rng.uniform(0.05, 0.95, m - 1)) if m > 1 else np.array([])
    digits = np.concatenate([[0.0], cuts, [1.0]]) * (1.0 - rho)
    raw = rng.uniform(0.2, 1.0, m + 1)
    probs = raw / raw.sum()
    return rho, digits, probs


compiled_only = pytest.mark.skipif(
    kernels.BACKEND != "compiled", reason="compiled backend unavailable"
)


class TestWordOffsets:
    def test_small_case_against_decoding(self, rng):
        from locdim import build_bernoulli

        spec = build_bernoulli(0.8, 0.4)
        offs, wts = kernels.word_offsets(spec.rho, spec.digits, spec.probs, 5)
        lo, _, w = brute_force_images(spec, 0.0, 1.0, 5)
        np.testing.assert_allclose(offs, lo, atol=1e-13)
        np.testing.assert_allclose(wts, w, atol=1e-15)

    @compiled_only
    def test_backends_identical(self, rng):
        for _ in range(20):
            rho, digits, probs = random_spec_arrays(rng)
            n = int(rng.integers(0, 8))
            o1, w1 = kernels.word_offsets(rho, digits, probs, n)
            o2, w2 = _pykernels.word_offsets(rho, digits, probs, n)
            np.testing.assert_array_equal(o1, o2)
            np.testing.assert_array_equal(w1, w2)


class TestProfileCells:
    @compiled_only
    def test_backends_identical(self, rng):
        for _ in range(30):
            k = int(rng.integers(1, 200))
            lo = rng.uniform(0, 1, k)
            hi = lo + rng.uniform(0.01, 0.5, k)
            w = rng.uniform(0, 1, k)
            b1, c1 = kernels.profile_cells(lo, hi, w)
            b2, c2 = _pykernels.profile_cells(lo, hi, w)
            np.testing.assert_array_equal(b1, b2)
            np.testing.assert_allclose(c1, c2, atol=1e-14)

    def test_membership_oracle(self, rng):
        for _ in range(10):
            k = int(rng.integers(2, 60))
            lo = rng.uniform(0, 1, k)
            hi = lo + rng.uniform(0.01, 0.5, k)
            w = rng.uniform(0, 1, k)
            bps, cells = kernels.profile_cells(lo, hi, w)
            for _ in range(20):
                t = int(rng.integers(0, len(cells)))
                x = 0.5 * (bps[t] + bps[t + 1])
                direct = w[(lo <= x) & (x <= hi)].sum()
                assert cells[t] == pytest.approx(direct, abs=1e-12)

    def test_merging(self):
        bps, cells = kernels.profile_cells(
            np.array([0.0, 0.5 + 1e-14]), np.array([0.5, 1.0]), np.array([1.0, 1.0])
        )
        np.testing.assert_allclose(bps, [0.0, 0.5, 1.0])
        np.testing.assert_allclose(cells, [1.0, 1.0])


class TestCoverageLevels:
    @compiled_only
    def test_sup_levels_match(self, rng):
        for _ in range(15):
            rho, digits, probs = random_spec_arrays(rng)
            n_max = int(rng.integers(1, 7))
            s1 = kernels.coverage_sup_levels(rho, digits, probs, n_max)
            s2 = _pykernels.coverage_sup_levels(rho, digits, probs, n_max)
            np.testing.assert_allclose(s1, s2, atol=1e-13)

    @compiled_only
    def test_min_levels_match(self, rng):
        for _ in range(15):
            rho, digits, probs = random_spec_arrays(rng)
            n_max = int(rng.integers(1, 7))
            a = float(rng.uniform(0.05, 0.4))
            s1 = kernels.coverage_min_levels(rho, digits, probs, a, 1 - a, n_max)
            s2 = _pykernels.coverage_min_levels(rho, digits, probs, a, 1 - a, n_max)
            np.testing.assert_allclose(s1, s2, atol=1e-13)

    def test_sup_levels_against_profile(self, rng):
        from locdim import build_bernoulli, sup_coverage

        spec = build_bernoulli(0.77, 0.5)
        levels = kernels.coverage_sup_levels(spec.rho, spec.digits, spec.probs, 6)
        for n in range(1, 7):
            assert levels[n - 1] == pytest.approx(sup_coverage(spec, n)[0], abs=1e-14)


class TestPointwiseWeight:
    @compiled_only
    def test_backends_agree(self, rng):
        for _ in range(40):
            rho, digits, probs = random_spec_arrays(rng)
            n = int(rng.integers(1, 9))
            x = float(rng.uniform(0, 1))
            v1 = kernels.pointwise_weight(rho, digits, probs, x, n, 0.0, 1.0)
            v2 = _pykernels.pointwise_weight(rho, digits, probs, x, n, 0.0, 1.0)
            assert v1 == pytest.approx(v2, abs=1e-12)


class TestPointStackWeight:
    def test_direct_oracle(self, rng):
        for _ in range(10):
            k = int(rng.integers(2, 80))
            lo = rng.uniform(0, 1, k)
            hi = lo + rng.uniform(0.01, 0.5, k)
            w = rng.uniform(0, 1, k)
            pts = rng.uniform(0, 1.5, 25)
            got = kernels.point_stack_weight(lo, hi, w, pts, tol=1e-12)
            for x, g in zip(pts, got):
                direct = w[(lo <= x + 1e-12) & (hi >= x - 1e-12)].sum()
                assert g == pytest.approx(direct, abs=1e-12)
