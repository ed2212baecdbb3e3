"""Classification of monic integer polynomials by their dominant root.

A real algebraic integer beta > 1 is Pisot when all its other roots lie
strictly inside the unit circle, and Salem when they lie inside or on
the circle with at least one exactly on it.  Contraction factors that
are reciprocals of such numbers are the only ones currently known to
satisfy the asymptotically weak separation condition, so the
classification doubles as a (sufficiency-only) certificate for the
conditional lower bounds.

Irreducibility is not verified; the certificate is conditional on the
caller supplying the minimal polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

MAX_DEGREE = 64
UNIMODULAR_TOL = 1e-9
POLISH_TOL = 1e-12


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, coefficients in descending degree order."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = self.coefficients
        if len(c) < 3:
            raise ValueError("degree must be at least 2")
        if len(c) > MAX_DEGREE + 1:
            raise ValueError(f"degree must be at most {MAX_DEGREE}")
        if c[0] != 1:
            raise ValueError("polynomial must be monic")
        if c[-1] == 0:
            raise ValueError("constant term must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return npoly.polyval(x, np.asarray(self.coefficients[::-1], dtype=np.float64))

    @staticmethod
    def parse(text: str) -> "IntPolynomial":
        """Parse comma-separated descending coefficients, e.g. ``1,0,-1,-1``."""
        return IntPolynomial(tuple(int(t) for t in text.replace(" ", "").split(",")))


@dataclass(frozen=True)
class Classification:
    kind: str  # "pisot" | "salem" | "neither"
    dominant_root: float
    reciprocal: float
    conjugate_moduli: tuple[float, ...]


def _polish_roots(coeffs_desc: np.ndarray, roots: np.ndarray, tol: float) -> np.ndarray:
    asc = coeffs_desc[::-1].astype(np.float64)
    deriv = npoly.polyder(asc)
    for _ in range(30):
        vals = npoly.polyval(roots, asc)
        dvals = npoly.polyval(roots, deriv)
        safe = np.abs(dvals) > 0
        step = np.zeros_like(roots)
        step[safe] = vals[safe] / dvals[safe]
        roots = roots - step
        if np.max(np.abs(step)) < tol:
            break
    return roots


def classify(poly: IntPolynomial, polish_tol: float = POLISH_TOL) -> Classification:
    """Classify by the largest real root > 1 and its conjugates.

    Roots come from the companion-matrix eigenvalues and are polished by
    Newton iteration.  ``neither`` is reported when there is no real root
    above 1 or the conjugate conditions fail.
    """
    coeffs = np.asarray(poly.coefficients, dtype=np.float64)
    roots = np.roots(coeffs)
    roots = _polish_roots(coeffs, roots, polish_tol)
    real_mask = np.abs(roots.imag) < 1e-9
    real_above = roots.real[real_mask & (roots.real > 1.0)]
    if len(real_above) == 0:
        return Classification(
            kind="neither", dominant_root=math.nan, reciprocal=math.nan,
            conjugate_moduli=tuple(sorted(np.abs(roots))),
        )
    dominant = float(np.max(real_above))
    conj_moduli = np.abs(roots[np.abs(roots - dominant) > 1e-9])
    conj_moduli = np.sort(conj_moduli)
    if len(conj_moduli) and conj_moduli[-1] < 1.0 - UNIMODULAR_TOL:
        kind = "pisot"
    elif (
        len(conj_moduli)
        and conj_moduli[-1] <= 1.0 + UNIMODULAR_TOL
        and np.any(np.abs(conj_moduli - 1.0) <= UNIMODULAR_TOL)
    ):
        kind = "salem"
    else:
        kind = "neither"
    return Classification(
        kind=kind,
        dominant_root=dominant,
        reciprocal=1.0 / dominant,
        conjugate_moduli=tuple(float(v) for v in conj_moduli),
    )


@dataclass(frozen=True)
class Certificate:
    awsc_known: bool
    note: str
    classification: Classification | None = None


def certify_rho(rho: float, poly: IntPolynomial | None = None,
                residual_tol: float = 1e-9) -> Certificate:
    """Certify (per current knowledge) that the contraction factor rho can
    satisfy the asymptotically weak separation condition.

    The certificate holds when a polynomial is supplied, it classifies as
    Pisot or Salem, and 1/rho is a root to within ``residual_tol``.  This
    is a sufficiency check, not a decision procedure; absence of a
    certificate proves nothing.
    """
    if poly is None:
        return Certificate(awsc_known=False, note="no algebraic certificate supplied")
    cls = classify(poly)
    if cls.kind not in ("pisot", "salem"):
        return Certificate(
            awsc_known=False, note=f"classification is {cls.kind}", classification=cls
        )
    if rho <= 0:
        return Certificate(awsc_known=False, note="rho must be positive", classification=cls)
    residual = abs(float(poly(1.0 / rho)))
    if residual > residual_tol:
        return Certificate(
            awsc_known=False,
            note=f"1/rho is not a root (|P(1/rho)|={residual:.3g})",
            classification=cls,
        )
    return Certificate(
        awsc_known=True,
        note=f"rho is the reciprocal of a {cls.kind} number",
        classification=cls,
    )
