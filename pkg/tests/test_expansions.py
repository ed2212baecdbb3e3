import math

import pytest

from locdim import (
    Expansion,
    SpecError,
    build_bernoulli,
    build_convolution,
    choose_xi_lazy,
    choose_xi_lmr,
    lazy_expansion,
    lmr_expansion,
    nonzero_density,
)
from locdim.expansions import digit_run_bound, reconstruct, window_satisfied

XI_SAFETY = 1.0 - 1e-9


def uniform_convolution(rho: float, m: int):
    return build_convolution(build_bernoulli(rho, 0.5, allow_cantor=True), m)


class TestChooseXiLazy:
    def test_bernoulli_07(self):
        assert choose_xi_lazy(build_bernoulli(0.7, 0.5)) == pytest.approx(0.4 * XI_SAFETY)

    def test_bernoulli_08(self, bc08):
        assert choose_xi_lazy(bc08) == pytest.approx(0.6 * XI_SAFETY)

    def test_no_overlap(self):
        with pytest.raises(SpecError):
            choose_xi_lazy(uniform_convolution(1 / 3, 2))


class TestChooseXiLmr:
    def test_m2_rho05(self):
        # linear slack oracle: conditions solved by hand for uniform digits
        d1, rho = 0.25, 0.5
        xi1 = (0.0 + rho - d1) / 2
        xi2 = (rho * (d1 + rho) - d1) / (1 + rho)
        xi3 = (d1 + rho - 0.5 - rho * d1) / (1 + rho)
        expected = min(xi1, xi2, xi3) * XI_SAFETY
        assert choose_xi_lmr(uniform_convolution(0.5, 2)) == pytest.approx(expected)
        assert expected == pytest.approx(1 / 12, rel=1e-6)

    def test_m2_boundary(self):
        with pytest.raises(SpecError):
            choose_xi_lmr(uniform_convolution(math.sqrt(2) - 1, 2))

    def test_m3_rho05_positive(self):
        assert choose_xi_lmr(uniform_convolution(0.5, 3)) > 0


class TestLazyExpansion:
    def test_right_endpoint_all_ones(self):
        exp = lazy_expansion(build_bernoulli(0.7, 0.5), 1.0, 25)
        assert exp.digits == (1,) * 25

    def test_window_constant(self):
        exp = lazy_expansion(build_bernoulli(0.7, 0.5), 0.5, 20)
        assert exp.J == 3  # 0.7^3 < 2*0.7-1 <= 0.7^2
        # frozen digit string produced by the stated rule
        assert "".join(map(str, exp.digits)) == "01011011111111011101"
        assert digit_run_bound(exp) < exp.J

    def test_first_digit_boundary(self):
        spec = build_bernoulli(0.7, 0.5)
        xi = choose_xi_lazy(spec)
        exp = lazy_expansion(spec, spec.digits[1] + xi + 1e-9, 1)
        assert exp.digits[0] == 1
        exp = lazy_expansion(spec, spec.digits[1] + xi - 1e-9, 1)
        assert exp.digits[0] == 0

    def test_domain(self):
        spec = build_bernoulli(0.7, 0.5)
        with pytest.raises(ValueError):
            lazy_expansion(spec, 0.0, 5)
        with pytest.raises(ValueError):
            lazy_expansion(spec, 1.1, 5)


class TestLmrExpansion:
    def test_first_digit_middle(self):
        spec = uniform_convolution(0.5, 2)
        xi = choose_xi_lmr(spec)
        assert spec.digits[1] + xi <= 0.5 <= spec.digits[1] + spec.rho - xi
        exp = lmr_expansion(spec, 0.5, 20)
        assert exp.digits[0] == 1

    def test_small_x_zero_prefix(self):
        spec = uniform_convolution(0.5, 2)
        exp = lmr_expansion(spec, 1e-8, 40)
        assert exp.digits[0] == 0
        interior = [i for i, a in enumerate(exp.digits) if a == 1]
        assert interior and interior[0] > 5

    def test_window_property_random(self, rng):
        spec = uniform_convolution(0.5, 2)
        for _ in range(200):
            x = float(rng.uniform(1e-9, 1 - 1e-9))
            exp = lmr_expansion(spec, x, 1000)
            assert window_satisfied(exp)

    def test_window_property_m3(self, rng):
        spec = uniform_convolution(0.5, 3)
        for _ in range(100):
            x = float(rng.uniform(1e-9, 1 - 1e-9))
            assert window_satisfied(lmr_expansion(spec, x, 500))

    def test_domain(self):
        spec = uniform_convolution(0.5, 2)
        with pytest.raises(ValueError):
            lmr_expansion(spec, 1.0, 5)


class TestNonzeroDensity:
    def test_all_zero(self):
        exp = Expansion(digits=(0,) * 10, xi=0.1, J=3, kind="lazy", alphabet_max=1)
        assert nonzero_density(exp) == 0.0

    def test_period_three(self):
        exp = Expansion(digits=(0, 1, 0, 0, 1, 0, 0, 1, 0), xi=0.1, J=3,
                        kind="lazy", alphabet_max=1)
        assert nonzero_density(exp, {0}) == pytest.approx(1 / 3)

    def test_lazy_density_bound(self, rng):
        spec = build_bernoulli(0.7, 0.5)
        for _ in range(20):
            x = float(rng.uniform(1e-6, 1 - 1e-6))
            exp = lazy_expansion(spec, x, 10_000)
            assert nonzero_density(exp) >= 1 / 3 - 0.01

    def test_empty_rejected(self):
        exp = Expansion(digits=(), xi=0.1, J=3, kind="lazy", alphabet_max=1)
        with pytest.raises(ValueError):
            nonzero_density(exp)


class TestPrefixContainment:
    @pytest.mark.parametrize("maker,spec_args", [
        ("lazy", (0.7, 0.5)),
        ("lazy", (0.8, 0.5)),
    ])
    def test_lazy_prefixes_contain_x(self, rng, maker, spec_args):
        spec = build_bernoulli(*spec_args)
        for _ in range(25):
            x = float(rng.uniform(1e-6, 1 - 1e-6))
            exp = lazy_expansion(spec, x, 400)
            partial = 0.0
            power = 1.0
            for a in exp.digits:
                partial += spec.digits[a] * power
                power *= spec.rho
                assert partial - 1e-10 <= x <= partial + power + 1e-10

    def test_lmr_prefixes_contain_x(self, rng):
        spec = uniform_convolution(0.5, 2)
        for _ in range(25):
            x = float(rng.uniform(1e-6, 1 - 1e-6))
            exp = lmr_expansion(spec, x, 400)
            partial = 0.0
            power = 1.0
            for a in exp.digits:
                partial += spec.digits[a] * power
                power *= spec.rho
                assert partial - 1e-10 <= x <= partial + power + 1e-10

    def test_reconstruction_error_bound(self, rng):
        spec = build_bernoulli(0.7, 0.5)
        for _ in range(20):
            x = float(rng.uniform(1e-6, 1 - 1e-6))
            for n in (5, 20, 60):
                exp = lazy_expansion(spec, x, n)
                assert abs(x - reconstruct(spec, exp.digits)) <= spec.rho**n + 1e-12

    def test_lmr_density(self, rng):
        spec = uniform_convolution(0.5, 2)
        for _ in range(20):
            x = float(rng.uniform(1e-6, 1 - 1e-6))
            exp = lmr_expansion(spec, x, 10_000)
            assert nonzero_density(exp) >= 1 / exp.J - 0.01
