import pytest

from locdim import IntPolynomial, certify_rho, classify

PLASTIC_MINPOLY = IntPolynomial((1, 0, -1, -1))  # x^3 - x - 1
LEHMER = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))  # degree 10


class TestIntPolynomial:
    def test_parse(self):
        assert IntPolynomial.parse("1,0,-1,-1").coefficients == (1, 0, -1, -1)

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial((2, 0, -1))

    def test_low_degree_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial((1, -1))

    def test_zero_constant_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial((1, -1, 0))

    def test_evaluation(self):
        assert PLASTIC_MINPOLY(2.0) == pytest.approx(5.0)


class TestClassify:
    def test_smallest_pisot(self):
        cls = classify(PLASTIC_MINPOLY)
        assert cls.kind == "pisot"
        assert cls.dominant_root == pytest.approx(1.324718, abs=1e-6)
        assert cls.reciprocal == pytest.approx(0.754877, abs=1e-6)

    def test_smallest_salem(self):
        cls = classify(LEHMER)
        assert cls.kind == "salem"
        assert cls.dominant_root == pytest.approx(1.176280, abs=1e-6)
        assert cls.reciprocal == pytest.approx(0.850137, abs=1e-6)
        unimodular = sum(1 for v in cls.conjugate_moduli if abs(v - 1.0) < 1e-9)
        assert unimodular == 8

    def test_sqrt_two_neither(self):
        cls = classify(IntPolynomial((1, 0, -2)))
        assert cls.kind == "neither"

    def test_no_dominant_root(self):
        # x^2 + 1 has no real root above 1
        cls = classify(IntPolynomial((1, 0, 1)))
        assert cls.kind == "neither"

    def test_reciprocal_identity(self):
        for poly in (PLASTIC_MINPOLY, LEHMER):
            cls = classify(poly)
            assert cls.reciprocal * cls.dominant_root == pytest.approx(1.0, abs=1e-12)

    def test_stability_under_tolerance_halving(self, rng):
        polys = [PLASTIC_MINPOLY, LEHMER]
        for _ in range(50):
            degree = int(rng.integers(2, 9))
            coeffs = [1] + [int(c) for c in rng.integers(-3, 4, degree)]
            if coeffs[-1] == 0:
                coeffs[-1] = 1
            polys.append(IntPolynomial(tuple(coeffs)))
        for poly in polys:
            assert classify(poly, polish_tol=1e-12).kind == classify(
                poly, polish_tol=5e-13
            ).kind


class TestCertifyRho:
    def test_pisot_reciprocal_certified(self):
        rho = classify(PLASTIC_MINPOLY).reciprocal
        cert = certify_rho(rho, PLASTIC_MINPOLY)
        assert cert.awsc_known
        assert "pisot" in cert.note

    def test_salem_reciprocal_certified(self):
        rho = classify(LEHMER).reciprocal
        assert certify_rho(rho, LEHMER).awsc_known

    def test_no_certificate(self):
        cert = certify_rho(0.8, None)
        assert not cert.awsc_known
        assert cert.note == "no algebraic certificate supplied"

    def test_wrong_classification(self):
        cert = certify_rho(0.754877, IntPolynomial((1, 0, -2)))
        assert not cert.awsc_known

    def test_wrong_rho(self):
        cert = certify_rho(0.8, PLASTIC_MINPOLY)
        assert not cert.awsc_known
        assert "not a root" in cert.note
